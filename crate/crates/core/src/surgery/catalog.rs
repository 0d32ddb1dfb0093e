//! Named manifolds.
//!
//! * `S3`: the empty presentation.
//! * `T3`: 0-surgery on the Borromean rings, `μ(1,2,3) = 1`.
//! * `S1xS2`, `SumS1xS2(k)`: 0-framed unlinks with zero triple tensor.
//! * `Lens(p,q)`: the unknot with slope `p/q`.
//! * `Poincare`, `Sigma237`: double branched covers of `T(3,5)` and `T(3,7)`.
//! * `Unlink(c)`: double branched cover of the `c`-component unlink.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{SurgeryCoefficient, SurgeryError, SurgeryPresentation, TripleLinking};
use crate::burnside::GroupKind;
use crate::link::{BraidWord, DbcReference};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CatalogName {
    S3,
    T3,
    S1xS2,
    SumS1xS2(usize),
    Lens(i64, i64),
    Poincare,
    Sigma237,
    Unlink(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogEntry {
    Surgery(SurgeryPresentation),
    DoubleBranchedCover(DbcReference),
}

impl CatalogEntry {
    pub fn as_surgery(&self) -> Option<&SurgeryPresentation> {
        match self {
            Self::Surgery(p) => Some(p),
            Self::DoubleBranchedCover(_) => None,
        }
    }
}

pub fn catalog(name: &CatalogName) -> Result<CatalogEntry, SurgeryError> {
    let zero = SurgeryCoefficient::integer(0);
    Ok(match *name {
        CatalogName::S3 => CatalogEntry::Surgery(SurgeryPresentation::empty()),
        CatalogName::T3 => {
            let borromean = TripleLinking::from_entries(3, &[([0, 1, 2], 1)])?;
            CatalogEntry::Surgery(SurgeryPresentation::unlink(vec![zero; 3]).with_triple(borromean)?)
        }
        CatalogName::S1xS2 => CatalogEntry::Surgery(SurgeryPresentation::unlink(vec![zero])),
        CatalogName::SumS1xS2(k) => {
            let s1xs2 = SurgeryPresentation::unlink(vec![zero]);
            let sum = (0..k).fold(SurgeryPresentation::empty(), |acc, _| acc.connected_sum(&s1xs2));
            CatalogEntry::Surgery(sum)
        }
        CatalogName::Lens(p, q) => {
            CatalogEntry::Surgery(SurgeryPresentation::unlink(vec![SurgeryCoefficient::new(p, q)?]))
        }
        CatalogName::Poincare => CatalogEntry::DoubleBranchedCover(DbcReference::braid_closure(
            BraidWord::torus(3, 5).expect("valid torus braid"),
            "T(3,5)",
        )),
        CatalogName::Sigma237 => CatalogEntry::DoubleBranchedCover(DbcReference::braid_closure(
            BraidWord::torus(3, 7).expect("valid torus braid"),
            "T(3,7)",
        )),
        CatalogName::Unlink(c) => CatalogEntry::DoubleBranchedCover(DbcReference::braid_closure(
            BraidWord::new(c.max(1), Vec::new()).expect("empty braid"),
            &format!("unlink_{c}"),
        )),
    })
}

impl CatalogName {
    /// The fundamental group, for the entries where it is free or abelian.
    pub fn fundamental_group(&self) -> Option<GroupKind> {
        match *self {
            Self::S3 => Some(GroupKind::Abelian(Vec::new())),
            Self::T3 => Some(GroupKind::Abelian(vec![0, 0, 0])),
            Self::S1xS2 => Some(GroupKind::Free(1)),
            Self::SumS1xS2(k) => Some(GroupKind::Free(k)),
            Self::Lens(p, _) => Some(GroupKind::Abelian(vec![p.unsigned_abs()])),
            Self::Unlink(c) => Some(GroupKind::Free(c.saturating_sub(1))),
            Self::Poincare | Self::Sigma237 => None,
        }
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::S3 => f.write_str("S3"),
            Self::T3 => f.write_str("T3"),
            Self::S1xS2 => f.write_str("S1xS2"),
            Self::SumS1xS2(k) => write!(f, "SumS1xS2({k})"),
            Self::Lens(p, q) => write!(f, "Lens({p},{q})"),
            Self::Poincare => f.write_str("Poincare"),
            Self::Sigma237 => f.write_str("Sigma237"),
            Self::Unlink(c) => write!(f, "Unlink({c})"),
        }
    }
}

impl FromStr for CatalogName {
    type Err = SurgeryError;

    fn from_str(s: &str) -> Result<Self, SurgeryError> {
        let unknown = || SurgeryError::UnknownCatalogName(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (head, args) = match compact.find('(') {
            Some(open) => {
                let inner = compact[open + 1..].strip_suffix(')').ok_or_else(unknown)?;
                let args: Vec<i64> = inner
                    .split(',')
                    .map(|a| a.parse::<i64>())
                    .collect::<Result<_, _>>()
                    .map_err(|_| unknown())?;
                (&compact[..open], args)
            }
            None => (compact.as_str(), Vec::new()),
        };
        let count = |v: i64| usize::try_from(v).map_err(|_| unknown());
        match (head.to_ascii_lowercase().as_str(), args.as_slice()) {
            ("s3", []) => Ok(Self::S3),
            ("t3", []) => Ok(Self::T3),
            ("s1xs2", []) => Ok(Self::S1xS2),
            ("sums1xs2", [k]) => Ok(Self::SumS1xS2(count(*k)?)),
            ("lens", [p, q]) => Ok(Self::Lens(*p, *q)),
            ("poincare", []) => Ok(Self::Poincare),
            ("sigma237", []) => Ok(Self::Sigma237),
            ("unlink", [c]) if *c >= 1 => Ok(Self::Unlink(count(*c)?)),
            _ => Err(unknown()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zmod::ZdModuleStructure;

    fn surgery(name: CatalogName) -> SurgeryPresentation {
        catalog(&name).unwrap().as_surgery().unwrap().clone()
    }

    #[test]
    fn t3_entry() {
        let t3 = surgery(CatalogName::T3);
        assert_eq!(t3.triple().unwrap().get(0, 1, 2), 1);
        for d in 2..8 {
            assert_eq!(t3.homology_zd(d), ZdModuleStructure::free(d, 3));
        }
    }

    #[test]
    fn sum_of_s1xs2() {
        let sum = surgery(CatalogName::SumS1xS2(3));
        assert!(sum.triple().unwrap().is_zero());
        assert_eq!(sum.homology_zd(5), ZdModuleStructure::free(5, 3));
        let one = surgery(CatalogName::S1xS2);
        assert_eq!(one.connected_sum(&one).connected_sum(&one), sum);
    }

    #[test]
    fn lens_and_sphere() {
        assert_eq!(surgery(CatalogName::Lens(10, 3)).homology_zd(2), ZdModuleStructure::free(2, 1));
        assert!(surgery(CatalogName::S3).homology_zd(7).is_trivial());
        assert!(catalog(&CatalogName::Lens(4, 2)).is_err());
    }

    #[test]
    fn homology_spheres_are_branched_covers() {
        match catalog(&CatalogName::Sigma237).unwrap() {
            CatalogEntry::DoubleBranchedCover(r) => assert_eq!(r.label(), "T(3,7)"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn parse_round_trip() {
        for name in [
            CatalogName::S3,
            CatalogName::T3,
            CatalogName::S1xS2,
            CatalogName::SumS1xS2(3),
            CatalogName::Lens(-7, 2),
            CatalogName::Poincare,
            CatalogName::Sigma237,
            CatalogName::Unlink(3),
        ] {
            assert_eq!(name.to_string().parse::<CatalogName>().unwrap(), name);
        }
        assert_eq!("lens( 4, 1 )".parse::<CatalogName>().unwrap(), CatalogName::Lens(4, 1));
        assert!("Klein".parse::<CatalogName>().is_err());
        assert!("Lens(4)".parse::<CatalogName>().is_err());
        assert!("Unlink(0)".parse::<CatalogName>().is_err());
    }
}
