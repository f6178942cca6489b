use serde::Serialize;

use super::Element;
use crate::laurent::Laurent;
use crate::scalar::Coefficient;

/// Order of `s_i s_j` in the C̃n Coxeter diagram (`None` for an infinite
/// bond).
pub fn coxeter_order(i: usize, j: usize, rank: usize) -> Option<usize> {
    let (i, j) = (i.min(j), i.max(j));
    if i == j {
        return Some(1);
    }
    if rank == 1 {
        return None;
    }
    Some(if j != i + 1 {
        2
    } else if i == 0 || j == rank {
        4
    } else {
        3
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresentationReport {
    pub rank: usize,
    pub checks: Vec<RelationCheck>,
}

impl PresentationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn alternating<C: Coefficient>(first: usize, second: usize, len: usize, rank: usize) -> Element<C> {
    let ops: Vec<usize> = (0..len).map(|k| if k % 2 == 0 { first } else { second }).collect();
    ops.iter()
        .rev()
        .fold(Element::unit(rank), |acc, &i| acc.left_mul_generator(i))
}

/// Checks the quadratic relations and all braid relations of the C̃n
/// diagram as identities in the algebra. For rank 1 it instead checks that
/// no braid relation of length up to 12 holds and that `(T_0 T_1)^k` is
/// never a multiple of the unit for `k ≤ 6`.
pub fn verify_presentation<C: Coefficient>(rank: usize) -> PresentationReport {
    let mut checks = Vec::new();
    let q = Laurent::<C>::q();
    for i in 0..=rank {
        let t = Element::<C>::generator(i, rank).expect("valid generator");
        let sq = t.left_mul_generator(i);
        let (qi, name) = if i == 0 {
            (Laurent::one(), "t_0^2 = 1".to_string())
        } else {
            (q.clone(), format!("(t_{i} - q)(t_{i} + 1) = 0"))
        };
        let expected = &t.scale(&(&qi - &Laurent::one())) + &Element::unit(rank).scale(&qi);
        checks.push(RelationCheck {
            relation: name,
            passed: sq == expected,
        });
    }
    if rank == 1 {
        for len in 2..=12 {
            checks.push(RelationCheck {
                relation: format!("no braid relation of length {len} between t_0 and t_1"),
                passed: alternating::<C>(0, 1, len, 1) != alternating::<C>(1, 0, len, 1),
            });
        }
        for k in 1..=6 {
            let p = alternating::<C>(0, 1, 2 * k, 1);
            let unit_multiple = p.num_terms() == 1 && p.iter().all(|(w, _)| w.is_identity());
            checks.push(RelationCheck {
                relation: format!("(t_0 t_1)^{k} is not a multiple of 1"),
                passed: !unit_multiple,
            });
        }
        return PresentationReport { rank, checks };
    }
    for i in 0..=rank {
        for j in i + 1..=rank {
            let m = coxeter_order(i, j, rank).expect("finite bond for rank ≥ 2");
            let lhs = alternating::<C>(i, j, m, rank);
            let rhs = alternating::<C>(j, i, m, rank);
            checks.push(RelationCheck {
                relation: format!("braid(t_{i}, t_{j}) of length {m}"),
                passed: lhs == rhs,
            });
        }
    }
    PresentationReport { rank, checks }
}
