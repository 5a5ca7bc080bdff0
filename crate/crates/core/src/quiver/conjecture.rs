use serde::Serialize;

use super::{ext_quiver_cached, ordinary_quiver};
use crate::combinatorics::{p_equivalent, Partition};
use crate::error::Result;
use crate::field::Characteristic;

/// `(λ, p) = 1`: no part of `λ` is divisible by `p`.
pub fn coprime_to(lambda: &Partition, ch: Characteristic) -> bool {
    match ch.p() {
        None => true,
        Some(p) => lambda.parts().iter().all(|&x| x % p as usize != 0),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LoopRow {
    pub n: usize,
    pub lambda: Partition,
    pub loops: usize,
    pub coprime: bool,
    /// `loops > 0` exactly when `λ` has a part divisible by `p`.
    pub consistent: bool,
}

/// An off-diagonal pair where the observed arrows differ from the
/// prediction through `Q_{n,∞}`, or where the multiplicity exceeds 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OffDiagonalFinding {
    pub n: usize,
    pub from: Partition,
    pub to: Partition,
    pub multiplicity: usize,
    pub predicted: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub p: Characteristic,
    pub n_max: usize,
    pub loops: Vec<LoopRow>,
    pub off_diagonal_findings: Vec<OffDiagonalFinding>,
    pub max_off_diagonal: usize,
    pub part_i_consistent: bool,
    pub part_ii_consistent: bool,
}

impl ConjectureReport {
    pub fn loop_count(&self, lambda: &Partition) -> Option<usize> {
        self.loops
            .iter()
            .find(|r| &r.lambda == lambda)
            .map(|r| r.loops)
    }
}

/// Tabulates loops and off-diagonal arrows of `Q_{n,p}` for `n ≤ n_max`
/// against the conjectured pattern. `Q_{n,∞}` is taken from the
/// two-distinct-parts rule.
pub fn conjecture_scan(n_max: usize, ch: Characteristic) -> Result<ConjectureReport> {
    let mut loops = Vec::new();
    let mut findings = Vec::new();
    let mut max_off = 0;
    for n in 1..=n_max {
        let q = ext_quiver_cached(n, ch)?;
        let q0 = ordinary_quiver(n);
        for (i, l) in q.vertices.iter().enumerate() {
            let c = q.arrows[i][i];
            let coprime = coprime_to(l, ch);
            loops.push(LoopRow {
                n,
                lambda: l.clone(),
                loops: c,
                coprime,
                consistent: (c > 0) == !coprime,
            });
            for (j, m) in q.vertices.iter().enumerate() {
                if i == j {
                    continue;
                }
                let mult = q.arrows[i][j];
                max_off = max_off.max(mult);
                let predicted = q0.vertices.iter().enumerate().any(|(a, d)| {
                    p_equivalent(d, l, ch)
                        && q0.vertices.iter().enumerate().any(|(b, g)| {
                            q0.arrows[a][b] > 0 && p_equivalent(g, m, ch)
                        })
                });
                if (mult > 0) != predicted || mult > 1 {
                    findings.push(OffDiagonalFinding {
                        n,
                        from: l.clone(),
                        to: m.clone(),
                        multiplicity: mult,
                        predicted,
                    });
                }
            }
        }
    }
    Ok(ConjectureReport {
        p: ch,
        n_max,
        part_i_consistent: loops.iter().all(|r| r.consistent),
        part_ii_consistent: findings.is_empty(),
        loops,
        off_diagonal_findings: findings,
        max_off_diagonal: max_off,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::part;

    #[test]
    fn p2_small() {
        let r = conjecture_scan(6, Characteristic::Prime(2)).unwrap();
        for (l, c) in [
            (&[2][..], 1),
            (&[2, 1], 1),
            (&[4], 2),
            (&[3, 2], 1),
            (&[4, 1], 2),
            (&[6], 1),
            (&[4, 2], 2),
            (&[3, 2, 1], 1),
        ] {
            assert_eq!(r.loop_count(&part(l)), Some(c), "{l:?}");
        }
        assert!(r.part_i_consistent);
    }

    #[test]
    fn coprime() {
        let ch = Characteristic::Prime(2);
        assert!(coprime_to(&part(&[3, 1]), ch));
        assert!(!coprime_to(&part(&[3, 2]), ch));
        assert!(coprime_to(&part(&[4]), Characteristic::Zero));
    }
}
