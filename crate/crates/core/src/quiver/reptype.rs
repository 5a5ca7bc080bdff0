use std::fmt;

use serde::{Serialize, Serializer};

use super::dynkin::{dynkin_classify, ComponentClass, MultiGraph};
use super::{ext_quiver_cached, separated_quiver, Quiver};
use crate::error::Result;
use crate::field::Characteristic;

/// Largest `n` for which [`rep_type`] computes `Q_{n,p}` to look for a
/// certificate.
pub const CERTIFICATE_MAX_N: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RepType {
    Finite,
    Tame,
    Wild,
}

impl fmt::Display for RepType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RepType::Finite => "finite",
            RepType::Tame => "tame",
            RepType::Wild => "wild",
        })
    }
}

impl Serialize for RepType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Representation type of a radical-square-zero algebra with Ext quiver
/// `q`, read off the separated quiver.
pub fn rep_type_two_nilpotent<V: Clone + fmt::Display>(q: &Quiver<V>) -> RepType {
    let g = MultiGraph::underlying(&separated_quiver(q));
    let comps = dynkin_classify(&g).expect("separated quivers are loop-free");
    if comps.iter().all(|c| c.kind.is_dynkin()) {
        RepType::Finite
    } else if comps.iter().all(|c| c.kind.is_dynkin() || c.kind.is_extended()) {
        RepType::Tame
    } else {
        RepType::Wild
    }
}

/// Finite iff `p = 2, n ≤ 3`, or `p = 3, n ≤ 4`, or `p ≥ 5` (or zero) and
/// `n ≤ 5`; wild otherwise.
pub fn theorem_verdict(n: usize, ch: Characteristic) -> RepType {
    let bound = match ch.p() {
        Some(2) => 3,
        Some(3) => 4,
        _ => 5,
    };
    if n <= bound {
        RepType::Finite
    } else {
        RepType::Wild
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    TheoremLookupOnly,
    /// The separated quiver of `Q_{n,p}` and its component types; at least
    /// one component is neither Dynkin nor extended Dynkin.
    SeparatedQuiver {
        graph: MultiGraph,
        components: Vec<ComponentClass>,
    },
}

impl Evidence {
    pub fn is_certificate(&self) -> bool {
        matches!(self, Evidence::SeparatedQuiver { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepTypeReport {
    pub n: usize,
    pub p: Characteristic,
    pub verdict: RepType,
    pub evidence: Evidence,
}

/// [`rep_type`] with an explicit limit on the quivers it computes.
pub fn rep_type_with_bound(n: usize, ch: Characteristic, certificate_max_n: usize) -> Result<RepTypeReport> {
    let verdict = theorem_verdict(n, ch);
    let mut evidence = Evidence::TheoremLookupOnly;
    if verdict == RepType::Wild && n <= certificate_max_n {
        let q = ext_quiver_cached(n, ch)?;
        let graph = MultiGraph::underlying(&separated_quiver(&q));
        let components = dynkin_classify(&graph)?;
        if components
            .iter()
            .any(|c| !c.kind.is_dynkin() && !c.kind.is_extended())
        {
            evidence = Evidence::SeparatedQuiver { graph, components };
        }
    }
    Ok(RepTypeReport {
        n,
        p: ch,
        verdict,
        evidence,
    })
}

/// Finite/wild verdict for `D_n(F)`, with a separated-quiver certificate
/// when one exists for `n ≤ CERTIFICATE_MAX_N`.
pub fn rep_type(n: usize, ch: Characteristic) -> Result<RepTypeReport> {
    rep_type_with_bound(n, ch, CERTIFICATE_MAX_N)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::part;
    use crate::quiver::tests::quiver_from;
    use crate::quiver::DynkinType;

    #[test]
    fn two_nilpotent_examples() {
        let ch = Characteristic::Prime(2);
        let q32 = quiver_from(3, ch, &[(&[2, 1], &[3], 1), (&[2, 1], &[2, 1], 1)]);
        assert_eq!(rep_type_two_nilpotent(&q32), RepType::Finite);
        let kron = Quiver::new(vec![part(&[2])], vec![vec![2]]).unwrap();
        assert_eq!(rep_type_two_nilpotent(&kron), RepType::Tame);
        let ch = Characteristic::Prime(3);
        let q53 = quiver_from(
            5,
            ch,
            &[
                (&[3, 2], &[5], 1),
                (&[3, 2], &[3, 2], 1),
                (&[3, 2], &[3, 1, 1], 1),
                (&[2, 2, 1], &[3, 2], 1),
                (&[4, 1], &[5], 1),
                (&[3, 1, 1], &[4, 1], 1),
                (&[3, 1, 1], &[3, 1, 1], 1),
            ],
        );
        assert_eq!(rep_type_two_nilpotent(&q53), RepType::Wild);
    }

    #[test]
    fn verdicts() {
        use Characteristic::{Prime, Zero};
        assert_eq!(theorem_verdict(3, Prime(2)), RepType::Finite);
        assert_eq!(theorem_verdict(4, Prime(2)), RepType::Wild);
        assert_eq!(theorem_verdict(4, Prime(3)), RepType::Finite);
        assert_eq!(theorem_verdict(5, Prime(3)), RepType::Wild);
        assert_eq!(theorem_verdict(5, Prime(5)), RepType::Finite);
        assert_eq!(theorem_verdict(6, Prime(7)), RepType::Wild);
        assert_eq!(theorem_verdict(5, Zero), RepType::Finite);
        assert_eq!(theorem_verdict(6, Zero), RepType::Wild);
    }

    #[test]
    fn certificates() {
        let r = rep_type(5, Characteristic::Prime(3)).unwrap();
        assert_eq!(r.verdict, RepType::Wild);
        let Evidence::SeparatedQuiver { components, .. } = &r.evidence else {
            panic!("no certificate for (5, 3)");
        };
        assert!(components.iter().any(|c| c.kind == DynkinType::None));
        let r = rep_type(5, Characteristic::Prime(5)).unwrap();
        assert_eq!(r.verdict, RepType::Finite);
        assert_eq!(r.evidence, Evidence::TheoremLookupOnly);
        let r = rep_type_with_bound(9, Characteristic::Prime(2), 8).unwrap();
        assert_eq!(r.evidence, Evidence::TheoremLookupOnly);
    }

    #[test]
    fn agrees_with_two_nilpotent_when_rad_squared_vanishes() {
        use crate::algebra::radical_power_dims;
        use crate::Algebra;
        for n in 1..=3 {
            for ch in [Characteristic::Prime(2), Characteristic::Prime(3), Characteristic::Zero] {
                let rad2 = crate::with_field!(ch, |f| {
                    radical_power_dims(&Algebra::new(n, &f).unwrap()).get(1).copied().unwrap_or(0)
                });
                if rad2 == 0 {
                    let q = ext_quiver_cached(n, ch).unwrap();
                    assert_eq!(rep_type(n, ch).unwrap().verdict, rep_type_two_nilpotent(&q));
                }
            }
        }
    }
}
