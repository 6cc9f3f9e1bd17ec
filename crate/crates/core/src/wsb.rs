//! Weak ⋆-braces: two regular ⋆-semigroup structures on one carrier,
//! linked by a weak distributivity law.
//!
//! A weak left ⋆-brace is a (2,2,2,1,1)-structure `(S, +, −, ·, ⋆)` in
//! which `(S, +, −)` and `(S, ·, ⋆)` are both regular ⋆-semigroups and
//!
//! ```text
//! x(y + z) = xy − x + xz        (grouping: (xy + (−x)) + xz)
//! −x + x   = x x⋆
//! ```
//!
//! hold for all elements. Writing `a − b` for `a + (−b)` throughout.
//! The two reducts then share their projections; [`validate_wsb`]
//! recomputes both projection sets and treats a difference as a
//! consistency failure rather than a property verdict.
//!
//! The derived maps are the usual `λ_a(b) = a(a⋆ + b)` and
//! `ρ_b(a) = (a⋆ + b)⋆ b`; on a weak left ⋆-brace, `λ` turns products
//! into compositions, `ρ` turns them into reversed compositions, and the
//! associated map `r(a, b) = (λ_a(b), ρ_b(a))` always solves the
//! Yang-Baxter equation, which [`WeakStarBrace::solution_report`]
//! rechecks from scratch instead of assuming.

use crate::semibrace::{classify_semibrace, TwoTwoOneAlgebra};
use crate::star::{
    reduct_witness, semigroup_is_inverse, suite_item, ClassReport, StarSemigroup, SuiteReport,
    ADD_AXIOMS, MUL_AXIOMS,
};
use crate::table::{BinOp, Element, Flag, UnOp, Witness};
use crate::ybe::{self, YbeReport};
use crate::ConsistencyError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WsbError {
    #[error("operations disagree on the order: {orders:?}")]
    OrderMismatch { orders: Vec<usize> },
    #[error("{0}")]
    Axiom(Witness),
    #[error(transparent)]
    Consistency(#[from] ConsistencyError),
}

/// A validated weak left ⋆-brace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakStarBrace {
    additive: StarSemigroup,
    multiplicative: StarSemigroup,
}

impl WeakStarBrace {
    pub fn order(&self) -> usize {
        self.multiplicative.order()
    }

    /// The reduct `(S, +, −)`.
    pub fn additive(&self) -> &StarSemigroup {
        &self.additive
    }

    /// The reduct `(S, ·, ⋆)`.
    pub fn multiplicative(&self) -> &StarSemigroup {
        &self.multiplicative
    }

    pub fn add(&self, a: Element, b: Element) -> Element {
        self.additive.mul(a, b)
    }

    pub fn neg(&self, a: Element) -> Element {
        self.additive.star(a)
    }

    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.multiplicative.mul(a, b)
    }

    pub fn star(&self, a: Element) -> Element {
        self.multiplicative.star(a)
    }

    /// `a − b`, that is `a + (−b)`.
    pub fn sub(&self, a: Element, b: Element) -> Element {
        self.add(a, self.neg(b))
    }

    /// The underlying (2,2,1)-algebra `(S, +, ·, ⋆)`, forgetting the
    /// negation.
    pub fn algebra(&self) -> TwoTwoOneAlgebra {
        TwoTwoOneAlgebra::new(self.multiplicative.clone(), self.additive.mul_table().clone())
            .expect("both reducts share the carrier")
    }

    /// Decides the Yang-Baxter property of the derived map from scratch.
    pub fn solution_report(&self) -> Result<YbeReport, ConsistencyError> {
        ybe::check_solution(&self.algebra())
    }
}

/// First failure of `x(y + z) = xy − x + xz` in lexicographic
/// `(x, y, z)` order, on raw tables.
pub fn weak_distributivity_witness(
    add: &BinOp,
    neg: &UnOp,
    mul: &BinOp,
) -> Option<Witness> {
    let n = mul.order();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = mul.get(x, add.get(y, z));
                let rhs = add.get(add.get(mul.get(x, y), neg.get(x)), mul.get(x, z));
                if lhs != rhs {
                    return Some(Witness::new("weak-distributivity", vec![x, y, z], lhs, rhs));
                }
            }
        }
    }
    None
}

/// First failure of `−x + x = x x⋆`.
pub fn projection_link_witness(
    add: &BinOp,
    neg: &UnOp,
    mul: &BinOp,
    star: &UnOp,
) -> Option<Witness> {
    let n = mul.order();
    for x in 0..n {
        let lhs = add.get(neg.get(x), x);
        let rhs = mul.get(x, star.get(x));
        if lhs != rhs {
            return Some(Witness::new("projection-link", vec![x], lhs, rhs));
        }
    }
    None
}

/// Validates the four tables as a weak left ⋆-brace.
///
/// Checks run in a fixed order for reproducible witnesses: the additive
/// reduct axioms, the multiplicative reduct axioms, weak distributivity,
/// then the projection link. On success the shared-projection fact
/// `P(S, +) = P(S, ·)` is recomputed; a violation is a consistency
/// failure because it follows from the axioms already checked.
pub fn validate_wsb(
    add: BinOp,
    neg: UnOp,
    mul: BinOp,
    star: UnOp,
) -> Result<WeakStarBrace, WsbError> {
    let orders = [add.order(), neg.order(), mul.order(), star.order()];
    if orders.iter().any(|&o| o != orders[0]) {
        return Err(WsbError::OrderMismatch {
            orders: orders.to_vec(),
        });
    }
    if let Some(w) = reduct_witness(&add, &neg, &ADD_AXIOMS) {
        return Err(WsbError::Axiom(w));
    }
    if let Some(w) = reduct_witness(&mul, &star, &MUL_AXIOMS) {
        return Err(WsbError::Axiom(w));
    }
    if let Some(w) = weak_distributivity_witness(&add, &neg, &mul) {
        return Err(WsbError::Axiom(w));
    }
    if let Some(w) = projection_link_witness(&add, &neg, &mul, &star) {
        return Err(WsbError::Axiom(w));
    }
    let additive = StarSemigroup::new(add, neg).expect("additive reduct already checked");
    let multiplicative = StarSemigroup::new(mul, star).expect("multiplicative reduct already checked");
    let add_p = additive.projections();
    let mul_p = multiplicative.projections();
    if add_p != mul_p {
        return Err(WsbError::Consistency(ConsistencyError::new(
            "shared-projections",
            format!(
                "additive projections {:?} differ from multiplicative projections {:?}",
                add_p, mul_p
            ),
        )));
    }
    Ok(WeakStarBrace {
        additive,
        multiplicative,
    })
}

/// The two weak ⋆-brace structures every suitable regular ⋆-semigroup
/// carries on its own multiplication.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InducedVariant {
    /// `a + b = ab`, `−a = a⋆`. Works exactly for Clifford semigroups.
    Direct,
    /// `a + b = ba`, `−a = a⋆`. Works exactly for completely regular,
    /// orthodox and locally inverse semigroups.
    Reversed,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("the semigroup is not Clifford: {0}")]
    NotClifford(Witness),
    #[error("the semigroup is not completely regular, orthodox and locally inverse: {0}")]
    NotCroLi(Witness),
    #[error(transparent)]
    Consistency(#[from] ConsistencyError),
}

/// Equips the semigroup with its induced weak ⋆-brace structure.
///
/// The class conditions are decided definitionally first; when they
/// hold, the full validation must succeed, so a late axiom failure is a
/// consistency failure rather than a construction error.
pub fn induce_brace(
    base: &StarSemigroup,
    variant: InducedVariant,
) -> Result<WeakStarBrace, ConstructError> {
    let report = base.classify();
    let n = base.order();
    match variant {
        InducedVariant::Direct => {
            if !report.clifford.holds {
                let w = report
                    .clifford
                    .witness
                    .clone()
                    .expect("failing flag carries a witness");
                return Err(ConstructError::NotClifford(w));
            }
        }
        InducedVariant::Reversed => {
            let failing = [
                &report.completely_regular,
                &report.orthodox,
                &report.locally_inverse,
            ]
            .into_iter()
            .find(|f| !f.holds);
            if let Some(flag) = failing {
                let w = flag.witness.clone().expect("failing flag carries a witness");
                return Err(ConstructError::NotCroLi(w));
            }
        }
    }
    let add = match variant {
        InducedVariant::Direct => base.mul_table().clone(),
        InducedVariant::Reversed => BinOp::from_fn(n, |a, b| base.mul(b, a)),
    };
    let neg = base.star_table().clone();
    validate_wsb(add, neg, base.mul_table().clone(), base.star_table().clone()).map_err(|e| {
        ConstructError::Consistency(ConsistencyError::new(
            "induced-brace",
            format!("class condition held but validation failed: {}", e),
        ))
    })
}

/// Verdict of the eight equivalent descriptions of a weak left ⋆-brace
/// with inverse reducts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionVerdict {
    pub id: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseEquivalents {
    /// The common truth value of all eight conditions.
    pub holds: bool,
    pub conditions: Vec<ConditionVerdict>,
}

/// Evaluates eight conditions that are equivalent on every weak left
/// ⋆-brace: both reducts being inverse semigroups, being a weak left
/// brace, and five identities. All eight are computed independently; a
/// split vote is a consistency failure.
pub fn inverse_equivalents(w: &WeakStarBrace) -> Result<InverseEquivalents, ConsistencyError> {
    let n = w.order();
    let holds2 = |f: &dyn Fn(Element, Element) -> bool| (0..n).all(|a| (0..n).all(|b| f(a, b)));

    let mul_inverse = w.multiplicative().classify().inverse.holds;
    let add_inverse = w.additive().classify().inverse.holds;
    let conditions = vec![
        ConditionVerdict {
            id: "mul-inverse".to_string(),
            holds: mul_inverse,
        },
        ConditionVerdict {
            id: "add-inverse".to_string(),
            holds: add_inverse,
        },
        ConditionVerdict {
            id: "weak-left-brace".to_string(),
            holds: mul_inverse && add_inverse,
        },
        ConditionVerdict {
            id: "a(-b)=a-ab+a".to_string(),
            holds: holds2(&|a, b| {
                w.mul(a, w.neg(b)) == w.add(w.sub(a, w.mul(a, b)), a)
            }),
        },
        ConditionVerdict {
            id: "ab=a+a(a*+b)".to_string(),
            holds: holds2(&|a, b| {
                w.mul(a, b) == w.add(a, w.mul(a, w.add(w.star(a), b)))
            }),
        },
        ConditionVerdict {
            id: "a+b=aa*(a+b)".to_string(),
            holds: holds2(&|a, b| {
                w.add(a, b) == w.mul(w.mul(a, w.star(a)), w.add(a, b))
            }),
        },
        ConditionVerdict {
            id: "a(a*+a*)=-a".to_string(),
            holds: (0..n).all(|a| w.mul(a, w.add(w.star(a), w.star(a))) == w.neg(a)),
        },
        ConditionVerdict {
            id: "b*(a*+b)=b*a*-b*".to_string(),
            holds: holds2(&|a, b| {
                w.mul(w.star(b), w.add(w.star(a), b))
                    == w.sub(w.mul(w.star(b), w.star(a)), w.star(b))
            }),
        },
    ];
    let first = conditions[0].holds;
    if conditions.iter().any(|c| c.holds != first) {
        let summary: Vec<String> = conditions
            .iter()
            .map(|c| format!("{}={}", c.id, c.holds))
            .collect();
        return Err(ConsistencyError::new(
            "T5.13",
            format!("equivalent conditions split: {}", summary.join(", ")),
        ));
    }
    Ok(InverseEquivalents {
        holds: first,
        conditions,
    })
}

/// Structural facts that hold on every weak left ⋆-brace: the additive
/// reduct is completely regular, orthodox and locally inverse; the
/// multiplicative reduct is orthodox and locally inverse; and one reduct
/// is a monoid exactly when the other is.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub additive: ClassReport,
    pub multiplicative: ClassReport,
}

pub fn structure_report(w: &WeakStarBrace) -> Result<StructureReport, ConsistencyError> {
    let additive = w.additive().classify();
    let multiplicative = w.multiplicative().classify();
    if !additive.cro_li() {
        return Err(ConsistencyError::new(
            "T5.15",
            format!(
                "additive reduct should be completely regular, orthodox and locally inverse: cr={} o={} li={}",
                additive.completely_regular.holds,
                additive.orthodox.holds,
                additive.locally_inverse.holds
            ),
        ));
    }
    if !multiplicative.o_li() {
        return Err(ConsistencyError::new(
            "T5.15",
            format!(
                "multiplicative reduct should be orthodox and locally inverse: o={} li={}",
                multiplicative.orthodox.holds, multiplicative.locally_inverse.holds
            ),
        ));
    }
    if additive.identity.is_some() != multiplicative.identity.is_some() {
        return Err(ConsistencyError::new(
            "C5.17",
            format!(
                "additive identity {:?} but multiplicative identity {:?}",
                additive.identity, multiplicative.identity
            ),
        ));
    }
    Ok(StructureReport {
        additive,
        multiplicative,
    })
}

/// The derived identities of weak left ⋆-braces, each checked
/// exhaustively. Item identifiers are the identities themselves; `e`
/// and `f` range over the (shared) projections, all other variables
/// over the carrier. Witness tuples list the variables in order of
/// first appearance.
pub fn wsb_identity_suite(w: &WeakStarBrace) -> SuiteReport {
    let n = w.order();
    let p = w.multiplicative().projections();
    let maps = ybe::derive_maps(&w.algebra());

    let add = |a, b| w.add(a, b);
    let neg = |a| w.neg(a);
    let mul = |a, b| w.mul(a, b);
    let star = |a| w.star(a);
    let sub = |a, b| w.sub(a, b);

    let mut items = Vec::new();

    let full = || 0..n;
    let scan1 = |id: &str, sides: &dyn Fn(Element) -> (Element, Element)| {
        suite_item(id, true, || {
            for a in full() {
                let (l, r) = sides(a);
                if l != r {
                    return Some(Witness::new(id, vec![a], l, r));
                }
            }
            None
        })
    };
    let scan2 = |id: &str, sides: &dyn Fn(Element, Element) -> (Element, Element)| {
        suite_item(id, true, || {
            for a in full() {
                for b in full() {
                    let (l, r) = sides(a, b);
                    if l != r {
                        return Some(Witness::new(id, vec![a, b], l, r));
                    }
                }
            }
            None
        })
    };
    let scan3 = |id: &str, sides: &dyn Fn(Element, Element, Element) -> (Element, Element)| {
        suite_item(id, true, || {
            for a in full() {
                for b in full() {
                    for c in full() {
                        let (l, r) = sides(a, b, c);
                        if l != r {
                            return Some(Witness::new(id, vec![a, b, c], l, r));
                        }
                    }
                }
            }
            None
        })
    };
    // Scans with projection-constrained variables; the witness tuple
    // keeps the variables in order of first appearance.
    let scan_proj1 = |id: &str, sides: &dyn Fn(Element) -> (Element, Element)| {
        suite_item(id, true, || {
            for &e in &p {
                let (l, r) = sides(e);
                if l != r {
                    return Some(Witness::new(id, vec![e], l, r));
                }
            }
            None
        })
    };
    let scan_xe = |id: &str, sides: &dyn Fn(Element, Element) -> (Element, Element)| {
        suite_item(id, true, || {
            for x in full() {
                for &e in &p {
                    let (l, r) = sides(x, e);
                    if l != r {
                        return Some(Witness::new(id, vec![x, e], l, r));
                    }
                }
            }
            None
        })
    };
    let scan_ex = |id: &str, sides: &dyn Fn(Element, Element) -> (Element, Element)| {
        suite_item(id, true, || {
            for &e in &p {
                for x in full() {
                    let (l, r) = sides(e, x);
                    if l != r {
                        return Some(Witness::new(id, vec![e, x], l, r));
                    }
                }
            }
            None
        })
    };
    let scan_ef = |id: &str, sides: &dyn Fn(Element, Element) -> (Element, Element)| {
        suite_item(id, true, || {
            for &e in &p {
                for &f in &p {
                    let (l, r) = sides(e, f);
                    if l != r {
                        return Some(Witness::new(id, vec![e, f], l, r));
                    }
                }
            }
            None
        })
    };
    let scan_xez = |id: &str, sides: &dyn Fn(Element, Element, Element) -> (Element, Element)| {
        suite_item(id, true, || {
            for x in full() {
                for &e in &p {
                    for z in full() {
                        let (l, r) = sides(x, e, z);
                        if l != r {
                            return Some(Witness::new(id, vec![x, e, z], l, r));
                        }
                    }
                }
            }
            None
        })
    };

    // Regular ⋆-semigroup identities of both reducts.
    items.push(scan1("a**=a", &|a| (star(star(a)), a)));
    items.push(scan1("aa*a=a", &|a| (mul(mul(a, star(a)), a), a)));
    items.push(scan2("(ab)*=b*a*", &|a, b| {
        (star(mul(a, b)), mul(star(b), star(a)))
    }));
    items.push(scan1("a*aa*=a*", &|a| (mul(mul(star(a), a), star(a)), star(a))));
    items.push(scan1("-(-a)=a", &|a| (neg(neg(a)), a)));
    items.push(scan1("a-a+a=a", &|a| (add(sub(a, a), a), a)));
    items.push(scan2("-(a+b)=-b-a", &|a, b| {
        (neg(add(a, b)), sub(neg(b), a))
    }));
    items.push(scan1("-a+a-a=-a", &|a| (sub(add(neg(a), a), a), neg(a))));

    // The projections x x⋆ and x⋆ x are additively idempotent and
    // self-negative.
    items.push(scan1("-(aa*)=aa*", &|a| {
        let q = mul(a, star(a));
        (neg(q), q)
    }));
    items.push(scan1("aa*+aa*=aa*", &|a| {
        let q = mul(a, star(a));
        (add(q, q), q)
    }));
    items.push(scan1("-(a*a)=a*a", &|a| {
        let q = mul(star(a), a);
        (neg(q), q)
    }));
    items.push(scan1("a*a+a*a=a*a", &|a| {
        let q = mul(star(a), a);
        (add(q, q), q)
    }));

    // The additive projections a − a and −a + a are multiplicatively
    // idempotent and star-fixed.
    items.push(scan1("(a-a)*=a-a", &|a| {
        let q = sub(a, a);
        (star(q), q)
    }));
    items.push(scan1("(a-a)(a-a)=a-a", &|a| {
        let q = sub(a, a);
        (mul(q, q), q)
    }));
    items.push(scan1("(-a+a)*=-a+a", &|a| {
        let q = add(neg(a), a);
        (star(q), q)
    }));
    items.push(scan1("(-a+a)(-a+a)=-a+a", &|a| {
        let q = add(neg(a), a);
        (mul(q, q), q)
    }));

    items.push(scan1("a+aa*=a", &|a| (add(a, mul(a, star(a))), a)));
    items.push(scan1("a-aa*=a", &|a| (sub(a, mul(a, star(a))), a)));
    items.push(scan1("aa*-a=-a", &|a| (sub(mul(a, star(a)), a), neg(a))));

    items.push(scan1("(-a)(-a)*=a-a", &|a| {
        (mul(neg(a), star(neg(a))), sub(a, a))
    }));
    items.push(scan1("(a-a)(-a)=-a", &|a| (mul(sub(a, a), neg(a)), neg(a))));
    items.push(scan1("(-a+a)a=a", &|a| (mul(add(neg(a), a), a), a)));

    items.push(scan1("(-a+a)(a-a)=a+(-a+a)(-a)", &|a| {
        let q = add(neg(a), a);
        (mul(q, sub(a, a)), add(a, mul(q, neg(a))))
    }));
    items.push(scan1("(a-a)(-a+a)=-a+(a-a)a", &|a| {
        let q = sub(a, a);
        (mul(q, add(neg(a), a)), add(neg(a), mul(q, a)))
    }));

    items.push(scan3("ab-ab+a(b+c)=a(b+c)", &|a, b, c| {
        let t = mul(a, add(b, c));
        (add(sub(mul(a, b), mul(a, b)), t), t)
    }));
    items.push(scan3("a(b+c)=a(b+a*ac)", &|a, b, c| {
        (
            mul(a, add(b, c)),
            mul(a, add(b, mul(mul(star(a), a), c))),
        )
    }));

    // On projections the two structures collapse to one idempotent.
    items.push(scan_proj1("e*=e", &|e| (star(e), e)));
    items.push(scan_proj1("-e=e", &|e| (neg(e), e)));
    items.push(scan_proj1("ee=e", &|e| (mul(e, e), e)));
    items.push(scan_proj1("e+e=e", &|e| (add(e, e), e)));
    items.push(scan_proj1("e-e=e", &|e| (sub(e, e), e)));
    items.push(scan_proj1("ee*=e", &|e| (mul(e, star(e)), e)));
    items.push(scan_proj1("e*e=e", &|e| (mul(star(e), e), e)));
    items.push(scan_proj1("-e+e=e", &|e| (add(neg(e), e), e)));

    items.push(scan2("-a+ab=a(a*+b)", &|a, b| {
        (add(neg(a), mul(a, b)), mul(a, add(star(a), b)))
    }));

    items.push(scan_xe("xe(x*+e)=x(x*+e)", &|x, e| {
        let t = add(star(x), e);
        (mul(mul(x, e), t), mul(x, t))
    }));

    items.push(scan2("-x+xyy*=(xy)(xy)*", &|x, y| {
        let xy = mul(x, y);
        (add(neg(x), mul(xy, star(y))), mul(xy, star(xy)))
    }));
    items.push(scan_ef("e+ef=e+e(f+e)", &|e, f| {
        (add(e, mul(e, f)), add(e, mul(e, add(f, e))))
    }));
    items.push(scan_xe("-x+xe=-xe+x", &|x, e| {
        (add(neg(x), mul(x, e)), add(neg(mul(x, e)), x))
    }));

    items.push(scan_ex("ex=x+e", &|e, x| (mul(e, x), add(x, e))));
    items.push(scan1("(-x+x)(x-x)=x-x-x+x", &|x| {
        (
            mul(add(neg(x), x), sub(x, x)),
            add(sub(sub(x, x), x), x),
        )
    }));

    items.push(scan2("x-y+y+y=x+y", &|x, y| {
        (add(add(sub(x, y), y), y), add(x, y))
    }));
    items.push(scan2("y+y-y+x=y+x", &|x, y| {
        (add(sub(add(y, y), y), x), add(y, x))
    }));

    items.push(scan2("x(y-y)y=xy", &|x, y| {
        (mul(mul(x, sub(y, y)), y), mul(x, y))
    }));

    items.push(scan3("x(-y+y)z=x(y-y)z", &|x, y, z| {
        (
            mul(mul(x, add(neg(y), y)), z),
            mul(mul(x, sub(y, y)), z),
        )
    }));
    items.push(scan_xez("x+e+z+e=x+z+e", &|x, e, z| {
        (add(add(add(x, e), z), e), add(add(x, z), e))
    }));
    items.push(scan_xe("(-x+x)e(-x+x)=-x+e+x", &|x, e| {
        let q = add(neg(x), x);
        (mul(mul(q, e), q), add(add(neg(x), e), x))
    }));

    items.push(scan2("xyy*(x*+y)=x(x*+y)", &|x, y| {
        let t = add(star(x), y);
        (mul(mul(mul(x, y), star(y)), t), mul(x, t))
    }));
    items.push(scan3("(x+y)*z=(x+y)*xx*z", &|x, y, z| {
        let s = star(add(x, y));
        (mul(s, z), mul(s, mul(mul(x, star(x)), z)))
    }));

    items.push(scan3("lambda_x(y+z)=lambda_x(y)+lambda_x(z)", &|x, y, z| {
        (
            maps.lambda(x, add(y, z)),
            add(maps.lambda(x, y), maps.lambda(x, z)),
        )
    }));
    items.push(scan3("lambda_x(lambda_y(z))=lambda_xy(z)", &|x, y, z| {
        (maps.lambda(x, maps.lambda(y, z)), maps.lambda(mul(x, y), z))
    }));
    items.push(scan3("rho_z(rho_x(y))=rho_xz(y)", &|x, y, z| {
        (maps.rho(z, maps.rho(x, y)), maps.rho(mul(x, z), y))
    }));
    items.push(scan2("xy=lambda_x(y)rho_y(x)", &|x, y| {
        (mul(x, y), mul(maps.lambda(x, y), maps.rho(y, x)))
    }));

    SuiteReport { items }
}

/// Verdict of the exchange between the weak ⋆-brace axioms and the
/// semibrace description on a fixed pair of reducts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BridgeReport {
    pub weak_distributivity: Flag,
    pub projection_link: Flag,
    /// The left semibrace axiom `x(y + z) = xy + x(x⋆ + z)`.
    pub left_axiom: Flag,
    /// The bridge identity `−x + xy = x(x⋆ + y)`.
    pub bridge: Flag,
    /// The shared verdict: the structure is a weak left ⋆-brace iff it
    /// is a left regular ⋆-semibrace satisfying the bridge identity.
    pub equivalent: bool,
}

/// Given two valid regular ⋆-semigroup reducts on one carrier, decides
/// the weak ⋆-brace axioms and the semibrace-plus-bridge description
/// independently and compares them. The two sides always agree; a
/// mismatch is a consistency failure.
pub fn bridge_check(
    add: &BinOp,
    neg: &UnOp,
    mul: &BinOp,
    star: &UnOp,
) -> Result<BridgeReport, WsbError> {
    let orders = [add.order(), neg.order(), mul.order(), star.order()];
    if orders.iter().any(|&o| o != orders[0]) {
        return Err(WsbError::OrderMismatch {
            orders: orders.to_vec(),
        });
    }
    if let Some(w) = reduct_witness(add, neg, &ADD_AXIOMS) {
        return Err(WsbError::Axiom(w));
    }
    if let Some(w) = reduct_witness(mul, star, &MUL_AXIOMS) {
        return Err(WsbError::Axiom(w));
    }

    let n = mul.order();
    let weak_distributivity =
        Flag::from_witness(weak_distributivity_witness(add, neg, mul));
    let projection_link =
        Flag::from_witness(projection_link_witness(add, neg, mul, star));

    let left_axiom = Flag::from_witness({
        let mut found = None;
        'outer: for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = mul.get(x, add.get(y, z));
                    let rhs = add.get(
                        mul.get(x, y),
                        mul.get(x, add.get(star.get(x), z)),
                    );
                    if lhs != rhs {
                        found = Some(Witness::new("left-semibrace", vec![x, y, z], lhs, rhs));
                        break 'outer;
                    }
                }
            }
        }
        found
    });
    let bridge = Flag::from_witness({
        let mut found = None;
        'outer: for x in 0..n {
            for y in 0..n {
                let lhs = add.get(neg.get(x), mul.get(x, y));
                let rhs = mul.get(x, add.get(star.get(x), y));
                if lhs != rhs {
                    found = Some(Witness::new("-x+xy=x(x*+y)", vec![x, y], lhs, rhs));
                    break 'outer;
                }
            }
        }
        found
    });

    let wsb_side = weak_distributivity.holds && projection_link.holds;
    let semibrace_side = left_axiom.holds && bridge.holds;
    if wsb_side != semibrace_side {
        return Err(WsbError::Consistency(ConsistencyError::new(
            "P5.7",
            format!(
                "weak ⋆-brace axioms say {} but semibrace plus bridge says {}",
                wsb_side, semibrace_side
            ),
        )));
    }
    Ok(BridgeReport {
        weak_distributivity,
        projection_link,
        left_axiom,
        bridge,
        equivalent: wsb_side,
    })
}

/// When a left regular ⋆-semibrace has an inverse additive semigroup,
/// the addition is a Clifford operation and the whole structure is a
/// weak left brace with `−a` the unique additive inverse.
///
/// Returns `Ok(None)` when the hypothesis fails (the algebra is not a
/// left regular ⋆-semibrace, or the addition is not inverse), and the
/// upgraded structure otherwise. Any failure of the guaranteed
/// conclusions is a consistency failure.
pub fn inverse_addition_upgrade(
    alg: &TwoTwoOneAlgebra,
) -> Result<Option<WeakStarBrace>, ConsistencyError> {
    let report = classify_semibrace(alg);
    if !report.is_left() || !semigroup_is_inverse(alg.add_table()) {
        return Ok(None);
    }
    let n = alg.order();
    let neg = UnOp::from_fn(n, |a| {
        crate::star::inverses_in(alg.add_table(), a)[0]
    });

    // Clifford addition: additive idempotents commute with everything.
    for e in 0..n {
        if alg.add(e, e) != e {
            continue;
        }
        for x in 0..n {
            if alg.add(e, x) != alg.add(x, e) {
                return Err(ConsistencyError::new(
                    "P5.8",
                    format!(
                        "additive idempotent {} is not central: {}+{} = {} but {}+{} = {}",
                        e,
                        e,
                        x,
                        alg.add(e, x),
                        x,
                        e,
                        alg.add(x, e)
                    ),
                ));
            }
        }
    }

    let upgraded = validate_wsb(
        alg.add_table().clone(),
        neg,
        alg.base().mul_table().clone(),
        alg.base().star_table().clone(),
    )
    .map_err(|e| {
        ConsistencyError::new(
            "P5.8",
            format!("upgrade to a weak left brace failed: {}", e),
        )
    })?;
    let equivalents = inverse_equivalents(&upgraded)?;
    if !equivalents.holds {
        return Err(ConsistencyError::new(
            "P5.8",
            "upgraded structure is not a weak left brace".to_string(),
        ));
    }
    Ok(Some(upgraded))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semibrace::{induce_addition, AdditionKind};

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

    // Five-element combinatorial Brandt semigroup: 0 plus the four
    // matrix units of a 2x2 grid, with transposition as the star.
    fn brandt() -> StarSemigroup {
        let mul = BinOp::new(
            5,
            vec![
                0, 0, 0, 0, 0, //
                0, 1, 2, 0, 0, //
                0, 0, 0, 1, 2, //
                0, 3, 4, 0, 0, //
                0, 0, 0, 3, 4,
            ],
        )
        .unwrap();
        let star = UnOp::new(5, vec![0, 1, 3, 2, 4]).unwrap();
        StarSemigroup::new(mul, star).unwrap()
    }

    // Klein four-group multiplication with a rectangular-band addition:
    // indices 0..3 carry the bit pairs (0,0), (1,1), (0,1), (1,0).
    fn klein_band_tables() -> (BinOp, UnOp, BinOp, UnOp) {
        let bits = [(0, 0), (1, 1), (0, 1), (1, 0)];
        let index = |p: (usize, usize)| bits.iter().position(|&q| q == p).unwrap();
        let add = BinOp::from_fn(4, |a, b| index((bits[a].0, bits[b].1)));
        let neg = UnOp::from_fn(4, |a| index((bits[a].1, bits[a].0)));
        let mul = BinOp::from_fn(4, |a, b| {
            index((bits[a].0 ^ bits[b].0, bits[a].1 ^ bits[b].1))
        });
        let star = UnOp::identity(4);
        (add, neg, mul, star)
    }

    #[test]
    fn group_carries_its_trivial_brace() {
        let w = induce_brace(&c3(), InducedVariant::Direct).unwrap();
        assert_eq!(w.order(), 3);
        assert_eq!(w.neg(1), 2);
        let suite = wsb_identity_suite(&w);
        assert!(suite.all_pass(), "{:?}", suite.first_failure());
        let inv = inverse_equivalents(&w).unwrap();
        assert!(inv.holds);
        assert!(structure_report(&w).is_ok());
        assert!(w.solution_report().unwrap().is_solution);
    }

    #[test]
    fn rectangular_band_carries_the_reversed_brace() {
        let w = induce_brace(&rect22(), InducedVariant::Reversed).unwrap();
        let suite = wsb_identity_suite(&w);
        assert!(suite.all_pass(), "{:?}", suite.first_failure());
        let inv = inverse_equivalents(&w).unwrap();
        assert!(!inv.holds);
        assert!(structure_report(&w).is_ok());
        assert!(w.solution_report().unwrap().is_solution);
    }

    #[test]
    fn rectangular_band_is_not_clifford() {
        let err = induce_brace(&rect22(), InducedVariant::Direct).unwrap_err();
        match err {
            ConstructError::NotClifford(w) => assert_eq!(w.axiom, "central-idempotents"),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn brandt_semigroup_supports_neither_variant() {
        let err = induce_brace(&brandt(), InducedVariant::Reversed).unwrap_err();
        match err {
            ConstructError::NotCroLi(w) => {
                assert_eq!(w.axiom, "square-h-class");
                assert_eq!(w.tuple, vec![2]);
            }
            other => panic!("unexpected error {other:?}"),
        }
        let err = induce_brace(&brandt(), InducedVariant::Direct).unwrap_err();
        match err {
            ConstructError::NotClifford(w) => {
                assert_eq!(w.axiom, "central-idempotents");
                assert_eq!(w.tuple, vec![1, 2]);
            }
            other => panic!("unexpected error {other:?}"),
        }
        let b = brandt();
        let err = validate_wsb(
            b.mul_table().clone(),
            b.star_table().clone(),
            b.mul_table().clone(),
            b.star_table().clone(),
        )
        .unwrap_err();
        match err {
            WsbError::Axiom(w) => assert!(
                w.axiom == "weak-distributivity" || w.axiom == "projection-link",
                "{w}"
            ),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn klein_band_fails_the_projection_link() {
        let (add, neg, mul, star) = klein_band_tables();
        let err = validate_wsb(add, neg, mul, star).unwrap_err();
        match err {
            WsbError::Axiom(w) => {
                assert_eq!(w.axiom, "projection-link");
                assert_eq!(w.tuple, vec![1]);
                assert_eq!((w.lhs, w.rhs), (1, 0));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn klein_band_bridge_report() {
        let (add, neg, mul, star) = klein_band_tables();
        let report = bridge_check(&add, &neg, &mul, &star).unwrap();
        assert!(report.weak_distributivity.holds);
        assert!(!report.projection_link.holds);
        assert!(report.left_axiom.holds);
        assert!(!report.bridge.holds);
        assert!(!report.equivalent);
        let w = report.bridge.witness.unwrap();
        assert_eq!(w.tuple, vec![1, 0]);
        assert_eq!((w.lhs, w.rhs), (1, 2));
        // At x = y = 1 both sides are the values reported alongside the
        // structure: −x + xx = 3 while x(x⋆ + x) = 0.
        assert_eq!(add.get(neg.get(1), mul.get(1, 1)), 3);
        assert_eq!(mul.get(1, add.get(star.get(1), 1)), 0);
    }

    #[test]
    fn upgrade_applies_to_inverse_additions_only() {
        let alg = induce_addition(&c3(), AdditionKind::Mul);
        let upgraded = inverse_addition_upgrade(&alg).unwrap().unwrap();
        assert!(inverse_equivalents(&upgraded).unwrap().holds);
        // The rectangular band's reversed addition is left regular but
        // not inverse, so the hypothesis fails.
        let alg = induce_addition(&rect22(), AdditionKind::MulRev);
        assert!(inverse_addition_upgrade(&alg).unwrap().is_none());
    }

    #[test]
    fn suite_ids_are_unique() {
        let w = induce_brace(&c3(), InducedVariant::Direct).unwrap();
        let suite = wsb_identity_suite(&w);
        let mut ids: Vec<&str> = suite.items.iter().map(|i| i.id.as_str()).collect();
        let total = ids.len();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), total);
        assert!(total >= 50);
    }
}
