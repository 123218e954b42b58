//! Named partition families and their enumeration.
//!
//! `distinct` and `distinct-even` have dedicated generators; every other
//! family is a predicate filter over the all-partitions stream, which keeps
//! membership logic in one obviously-correct place.

use std::fmt;

use crate::cells;
use crate::partition::{
    all_partitions, distinct_even_partitions, distinct_partitions, Partition,
};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilySpec {
    All,
    Distinct,
    DistinctEven,
    PartsTwoMod4,
    SelfConjugate,
    EvenPartsOneRepeat,
    Syp0,
    SypPm1,
    ContainedInStaircase(usize),
    MaximalInStaircase(usize),
}

impl FamilySpec {
    /// Decidable membership predicate.
    pub fn contains(&self, p: &Partition) -> bool {
        match *self {
            FamilySpec::All => true,
            FamilySpec::Distinct => p.parts().windows(2).all(|w| w[0] > w[1]),
            FamilySpec::DistinctEven => {
                p.parts().iter().all(|&x| x % 2 == 0)
                    && p.parts().windows(2).all(|w| w[0] > w[1])
            }
            FamilySpec::PartsTwoMod4 => p.parts().iter().all(|&x| x % 4 == 2),
            FamilySpec::SelfConjugate => p.is_self_conjugate(),
            FamilySpec::EvenPartsOneRepeat => has_exactly_one_repeat_even(p),
            FamilySpec::Syp0 => cells::is_syp0(p),
            FamilySpec::SypPm1 => cells::is_syp_pm1(p),
            FamilySpec::ContainedInStaircase(r) => p.contained_in_staircase(r),
            FamilySpec::MaximalInStaircase(r) => {
                p.contained_in_staircase(r) && (r == 0 || !p.contained_in_staircase(r - 1))
            }
        }
    }

    pub fn parse(s: &str) -> Option<FamilySpec> {
        match s {
            "all" => return Some(FamilySpec::All),
            "distinct" => return Some(FamilySpec::Distinct),
            "distinct-even" => return Some(FamilySpec::DistinctEven),
            "parts-2-mod-4" => return Some(FamilySpec::PartsTwoMod4),
            "self-conjugate" => return Some(FamilySpec::SelfConjugate),
            "even-parts-one-repeat" => return Some(FamilySpec::EvenPartsOneRepeat),
            "syp0" => return Some(FamilySpec::Syp0),
            "syp-pm1" => return Some(FamilySpec::SypPm1),
            _ => {}
        }
        let (name, rest) = s.split_once('(')?;
        let r: usize = rest.strip_suffix(')')?.parse().ok()?;
        match name {
            "contained-in-staircase" => Some(FamilySpec::ContainedInStaircase(r)),
            "maximal-in-staircase" => Some(FamilySpec::MaximalInStaircase(r)),
            _ => None,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::All => write!(f, "all"),
            FamilySpec::Distinct => write!(f, "distinct"),
            FamilySpec::DistinctEven => write!(f, "distinct-even"),
            FamilySpec::PartsTwoMod4 => write!(f, "parts-2-mod-4"),
            FamilySpec::SelfConjugate => write!(f, "self-conjugate"),
            FamilySpec::EvenPartsOneRepeat => write!(f, "even-parts-one-repeat"),
            FamilySpec::Syp0 => write!(f, "syp0"),
            FamilySpec::SypPm1 => write!(f, "syp-pm1"),
            FamilySpec::ContainedInStaircase(r) => write!(f, "contained-in-staircase({r})"),
            FamilySpec::MaximalInStaircase(r) => write!(f, "maximal-in-staircase({r})"),
        }
    }
}

// Even parts, with exactly one part value of multiplicity ≥ 2.
fn has_exactly_one_repeat_even(p: &Partition) -> bool {
    if p.is_empty() || p.parts().iter().any(|&x| x % 2 != 0) {
        return false;
    }
    let mut repeated = 0usize;
    let mut i = 0;
    let parts = p.parts();
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        if j - i >= 2 {
            repeated += 1;
        }
        i = j;
    }
    repeated == 1
}

/// Streams the partitions of `n` in the family, each exactly once, in
/// decreasing lexicographic order.
pub fn enumerate(n: usize, family: FamilySpec) -> Box<dyn Iterator<Item = Partition>> {
    match family {
        FamilySpec::Distinct => Box::new(distinct_partitions(n)),
        FamilySpec::DistinctEven => Box::new(distinct_even_partitions(n)),
        f => Box::new(all_partitions(n).filter(move |p| f.contains(p))),
    }
}

pub fn family_count(n: usize, family: FamilySpec) -> usize {
    enumerate(n, family).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn direct_generators_agree_with_predicates() {
        for n in 0..=16 {
            for family in [FamilySpec::Distinct, FamilySpec::DistinctEven] {
                let direct: Vec<Partition> = enumerate(n, family).collect();
                let filtered: Vec<Partition> = all_partitions(n)
                    .filter(|p| family.contains(p))
                    .collect();
                assert_eq!(direct, filtered, "n={n} family={family}");
            }
        }
    }

    #[test]
    fn distinct_even_of_six() {
        let got: Vec<Partition> = enumerate(6, FamilySpec::DistinctEven).collect();
        assert_eq!(got, vec![pt(&[6]), pt(&[4, 2])]);
    }

    #[test]
    fn one_repeat_family() {
        let f = FamilySpec::EvenPartsOneRepeat;
        assert!(f.contains(&pt(&[2, 2])));
        assert!(f.contains(&pt(&[4, 2, 2])));
        assert!(f.contains(&pt(&[2, 2, 2, 2])));
        assert!(!f.contains(&pt(&[4, 2])));
        assert!(!f.contains(&pt(&[4, 4, 2, 2])));
        assert!(!f.contains(&pt(&[3, 3])));
        assert!(!f.contains(&Partition::empty()));
        assert_eq!(family_count(4, f), 1); // (2,2)
        assert_eq!(family_count(6, f), 1); // (2,2,2)
    }

    #[test]
    fn staircase_families() {
        assert_eq!(family_count(4, FamilySpec::MaximalInStaircase(3)), 3);
        assert_eq!(family_count(4, FamilySpec::MaximalInStaircase(4)), 2);
        assert_eq!(family_count(4, FamilySpec::MaximalInStaircase(2)), 0);
        let in_d3: Vec<Partition> = enumerate(4, FamilySpec::ContainedInStaircase(3)).collect();
        assert_eq!(in_d3, vec![pt(&[3, 1]), pt(&[2, 2]), pt(&[2, 1, 1])]);
    }

    #[test]
    fn parse_round_trip() {
        let names = [
            "all",
            "distinct",
            "distinct-even",
            "parts-2-mod-4",
            "self-conjugate",
            "even-parts-one-repeat",
            "syp0",
            "syp-pm1",
            "contained-in-staircase(5)",
            "maximal-in-staircase(7)",
        ];
        for name in names {
            let f = FamilySpec::parse(name).unwrap();
            assert_eq!(f.to_string(), name);
        }
        assert_eq!(FamilySpec::parse("nosuch"), None);
        assert_eq!(FamilySpec::parse("maximal-in-staircase(x)"), None);
    }

    #[test]
    fn syp_family_counts() {
        // sizes of syP0(n) for n = 0..8
        let counts: Vec<usize> = (0..=8).map(|n| family_count(n, FamilySpec::Syp0)).collect();
        assert_eq!(counts, vec![1, 0, 1, 0, 1, 0, 2, 0, 2]);
        // syP±1 members are the staircases
        for n in 0..=12 {
            let got = family_count(n, FamilySpec::SypPm1);
            let want = usize::from(n == 0 || (1..=6).any(|r| r * (r + 1) / 2 == n));
            assert_eq!(got, want, "n={n}");
        }
    }
}
