//! The candidate Yang-Baxter map of a (2,2,1)-algebra and the machinery
//! for deciding whether it is a set-theoretic solution.
//!
//! Every algebra `(S, +, ·, ⋆)` defines
//!
//! ```text
//! λ_a(b) = a(a⋆ + b),    ρ_b(a) = (a⋆ + b)⋆ b,
//! r(a, b) = (λ_a(b), ρ_b(a)),
//! ```
//!
//! and `r` solves the Yang-Baxter equation exactly when the three
//! component equations
//!
//! ```text
//! (1) λ_x λ_y(z)            = λ_{λ_x(y)} λ_{ρ_y(x)}(z)
//! (2) ρ_z ρ_y(x)            = ρ_{ρ_z(y)} ρ_{λ_y(z)}(x)
//! (3) λ_{ρ_{λ_y(z)}(x)}(ρ_z(y)) = ρ_{λ_{ρ_y(x)}(z)}(λ_x(y))
//! ```
//!
//! hold for all triples. [`check_solution`] decides this twice: once
//! through the component equations and once through the braid relation
//! `(r × id)(id × r)(r × id) = (id × r)(r × id)(id × r)` evaluated
//! pointwise on `S³`. The two routes are compared, never collapsed; a
//! disagreement is a consistency failure.

use crate::semibrace::TwoTwoOneAlgebra;
use crate::table::{BinOp, Element, Flag, Witness};
use crate::ConsistencyError;
use thiserror::Error;

/// The derived maps of an algebra, tabulated. `lambda(a, b)` is
/// `λ_a(b)`; `rho(b, a)` is `ρ_b(a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YbeMaps {
    lambda: BinOp,
    rho: BinOp,
}

impl YbeMaps {
    pub fn order(&self) -> usize {
        self.lambda.order()
    }

    pub fn lambda(&self, a: Element, b: Element) -> Element {
        self.lambda.get(a, b)
    }

    pub fn rho(&self, b: Element, a: Element) -> Element {
        self.rho.get(b, a)
    }

    /// The row `b ↦ λ_a(b)`.
    pub fn lambda_row(&self, a: Element) -> &[Element] {
        self.lambda.row(a)
    }

    /// The row `a ↦ ρ_b(a)`.
    pub fn rho_row(&self, b: Element) -> &[Element] {
        self.rho.row(b)
    }

    pub fn apply(&self, a: Element, b: Element) -> (Element, Element) {
        (self.lambda(a, b), self.rho(b, a))
    }
}

/// Tabulates `λ` and `ρ` for the algebra.
pub fn derive_maps(alg: &TwoTwoOneAlgebra) -> YbeMaps {
    let n = alg.order();
    let lambda = BinOp::from_fn(n, |a, b| alg.mul(a, alg.add(alg.star(a), b)));
    let rho = BinOp::from_fn(n, |b, a| {
        alg.mul(alg.star(alg.add(alg.star(a), b)), b)
    });
    YbeMaps { lambda, rho }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("element {value} is not below the order {order}")]
pub struct RangeError {
    pub value: usize,
    pub order: usize,
}

/// Evaluates `r(a, b) = (λ_a(b), ρ_b(a))`, rejecting out-of-range
/// inputs.
pub fn apply_r(
    alg: &TwoTwoOneAlgebra,
    a: Element,
    b: Element,
) -> Result<(Element, Element), RangeError> {
    let n = alg.order();
    for v in [a, b] {
        if v >= n {
            return Err(RangeError { value: v, order: n });
        }
    }
    Ok(derive_maps(alg).apply(a, b))
}

/// Full verdict on the candidate map `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YbeReport {
    pub is_solution: bool,
    /// First failing component equation, scanning equation (1) over all
    /// triples, then (2), then (3), each in lexicographic order. The
    /// axiom names are `ybe-1`, `ybe-2`, `ybe-3`.
    pub first_failure: Option<Witness>,
    /// Every `λ_a` is a bijection. A failing witness lists the element
    /// `a` and two inputs that collide.
    pub left_nondegenerate: Flag,
    /// Every `ρ_b` is a bijection.
    pub right_nondegenerate: Flag,
    /// `r ∘ r` is the identity. A failing witness lists the pair and the
    /// first coordinate where `r²` departs from it.
    pub involutive: Flag,
    /// `r ∘ r = r`.
    pub idempotent: Flag,
}

fn first_equation_failure(maps: &YbeMaps) -> Option<Witness> {
    let n = maps.order();
    let l = |a, b| maps.lambda(a, b);
    let r = |b, a| maps.rho(b, a);

    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = l(x, l(y, z));
                let rhs = l(l(x, y), l(r(y, x), z));
                if lhs != rhs {
                    return Some(Witness::new("ybe-1", vec![x, y, z], lhs, rhs));
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = r(z, r(y, x));
                let rhs = r(r(z, y), r(l(y, z), x));
                if lhs != rhs {
                    return Some(Witness::new("ybe-2", vec![x, y, z], lhs, rhs));
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = l(r(l(y, z), x), r(z, y));
                let rhs = r(l(r(y, x), z), l(x, y));
                if lhs != rhs {
                    return Some(Witness::new("ybe-3", vec![x, y, z], lhs, rhs));
                }
            }
        }
    }
    None
}

fn braid_holds(maps: &YbeMaps) -> bool {
    let n = maps.order();
    let r12 = |(x, y, z): (Element, Element, Element)| {
        let (u, v) = maps.apply(x, y);
        (u, v, z)
    };
    let r23 = |(x, y, z): (Element, Element, Element)| {
        let (u, v) = maps.apply(y, z);
        (x, u, v)
    };
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let t = (x, y, z);
                if r12(r23(r12(t))) != r23(r12(r23(t))) {
                    return false;
                }
            }
        }
    }
    true
}

fn nondegeneracy_flag(maps: &YbeMaps, left: bool) -> Flag {
    let n = maps.order();
    let axiom = if left {
        "left-nondegenerate"
    } else {
        "right-nondegenerate"
    };
    for a in 0..n {
        let row: Vec<Element> = if left {
            maps.lambda_row(a).to_vec()
        } else {
            maps.rho_row(a).to_vec()
        };
        if crate::table::bijection_check(&row, n) {
            continue;
        }
        // A non-bijective self-map on a finite set collides somewhere.
        for b1 in 0..n {
            for b2 in (b1 + 1)..n {
                if row[b1] == row[b2] {
                    return Flag::fail(Witness::new(axiom, vec![a], b1, b2));
                }
            }
        }
        unreachable!("non-bijective rows collide");
    }
    Flag::ok()
}

fn iteration_flag(maps: &YbeMaps, idempotent: bool) -> Flag {
    let n = maps.order();
    let axiom = if idempotent { "idempotent" } else { "involutive" };
    for a in 0..n {
        for b in 0..n {
            let once = maps.apply(a, b);
            let twice = maps.apply(once.0, once.1);
            let target = if idempotent { once } else { (a, b) };
            if twice != target {
                let (lhs, rhs) = if twice.0 != target.0 {
                    (twice.0, target.0)
                } else {
                    (twice.1, target.1)
                };
                return Flag::fail(Witness::new(axiom, vec![a, b], lhs, rhs));
            }
        }
    }
    Flag::ok()
}

/// Decides whether the algebra's map solves the Yang-Baxter equation.
///
/// The component equations and the braid relation are evaluated
/// independently; they agree on every input, so a disagreement is
/// reported as a consistency failure rather than a verdict.
pub fn check_solution(alg: &TwoTwoOneAlgebra) -> Result<YbeReport, ConsistencyError> {
    let maps = derive_maps(alg);
    let first_failure = first_equation_failure(&maps);
    let equations_hold = first_failure.is_none();
    let braid = braid_holds(&maps);
    if equations_hold != braid {
        return Err(ConsistencyError::new(
            "braid-crosscheck",
            format!(
                "component equations say {} but the braid relation says {}",
                equations_hold, braid
            ),
        ));
    }
    Ok(YbeReport {
        is_solution: equations_hold,
        first_failure,
        left_nondegenerate: nondegeneracy_flag(&maps, true),
        right_nondegenerate: nondegeneracy_flag(&maps, false),
        involutive: iteration_flag(&maps, false),
        idempotent: iteration_flag(&maps, true),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semibrace::{induce_addition, AdditionKind};
    use crate::star::StarSemigroup;
    use crate::table::UnOp;

    fn c3() -> StarSemigroup {
        let mul = BinOp::from_fn(3, |a, b| (a + b) % 3);
        let star = UnOp::new(3, vec![0, 2, 1]).unwrap();
        StarSemigroup::new(mul, star).unwrap()
    }

    fn rect22() -> StarSemigroup {
        let mul = BinOp::from_fn(4, |x, y| 2 * (x / 2) + (y % 2));
        let star = UnOp::from_fn(4, |x| 2 * (x % 2) + x / 2);
        StarSemigroup::new(mul, star).unwrap()
    }

    #[test]
    fn trivial_group_brace_is_involutive_solution() {
        let alg = induce_addition(&c3(), AdditionKind::Mul);
        let report = check_solution(&alg).unwrap();
        assert!(report.is_solution);
        assert!(report.left_nondegenerate.holds);
        assert!(report.right_nondegenerate.holds);
        assert!(report.involutive.holds);
        assert!(!report.idempotent.holds);
        // λ_a(b) = a a⁻¹ b = b and ρ_b(a) = b⁻¹ a b.
        let maps = derive_maps(&alg);
        assert_eq!(maps.lambda(1, 2), 2);
        assert_eq!(maps.rho(1, 2), 2);
    }

    #[test]
    fn c3_star_star_first_failure() {
        let alg = induce_addition(&c3(), AdditionKind::StarStar);
        let report = check_solution(&alg).unwrap();
        assert!(!report.is_solution);
        let w = report.first_failure.unwrap();
        assert_eq!(w.axiom, "ybe-1");
        assert_eq!(w.tuple, vec![0, 1, 0]);
        assert_eq!((w.lhs, w.rhs), (1, 0));
    }

    #[test]
    fn rect22_proj_left_is_idempotent_solution() {
        let alg = induce_addition(&rect22(), AdditionKind::ProjLeft);
        let report = check_solution(&alg).unwrap();
        assert!(report.is_solution);
        assert!(report.idempotent.holds);
        assert!(!report.involutive.holds);
        assert!(!report.left_nondegenerate.holds);
        assert_eq!(apply_r(&alg, 1, 2).unwrap(), (0, 0));
    }

    #[test]
    fn rect22_conj_is_degenerate_solution() {
        // λ_x(y) = x and ρ_y(x) = x⋆y on a rectangular band with
        // conjugation addition.
        let alg = induce_addition(&rect22(), AdditionKind::Conj);
        let report = check_solution(&alg).unwrap();
        assert!(report.is_solution);
        let maps = derive_maps(&alg);
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(maps.lambda(x, y), x);
                assert_eq!(maps.rho(y, x), alg.mul(alg.star(x), y));
            }
        }
    }

    #[test]
    fn apply_r_rejects_out_of_range() {
        let alg = induce_addition(&c3(), AdditionKind::Mul);
        assert_eq!(
            apply_r(&alg, 3, 0).unwrap_err(),
            RangeError { value: 3, order: 3 }
        );
    }
}
