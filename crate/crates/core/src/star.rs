//! Regular ⋆-semigroups: validation, projections, Green's relations,
//! classification and identity suites.
//!
//! A regular ⋆-semigroup is a semigroup `(S, ·)` with a unary operation
//! `x ↦ x⋆` satisfying `x x⋆ x = x`, `x⋆⋆ = x` and `(xy)⋆ = y⋆ x⋆`. Its
//! projections `P = {e | e² = e = e⋆}` coincide with `{x x⋆ | x ∈ S}`
//! and with `{x⋆ x | x ∈ S}`, and the idempotents satisfy `E = P · P`;
//! [`StarSemigroup::projection_sets`] recomputes both descriptions and
//! fails loudly if they ever disagree.
//!
//! Classification into the classical subclasses (inverse, orthodox,
//! completely regular, locally inverse, Clifford) is done from the
//! definitions. Each subclass also has an equational characterisation in
//! terms of projections; [`StarSemigroup::equational_crosscheck`]
//! evaluates those independently and compares them with the definitional
//! verdicts rather than trusting either side.

use crate::table::{
    associativity_check, BinOp, Element, Flag, UnOp, Witness,
};
use crate::ConsistencyError;
use thiserror::Error;

/// Axiom identifiers for one regular ⋆-semigroup reduct. Parameterised
/// so the additive reduct of a weak ⋆-brace reports its own names.
#[derive(Debug, Clone, Copy)]
pub struct ReductAxioms {
    pub assoc: &'static str,
    pub quasi_inverse: &'static str,
    pub involution: &'static str,
    pub antimorphism: &'static str,
}

/// Axiom names for the multiplicative reduct `(S, ·, ⋆)`.
pub const MUL_AXIOMS: ReductAxioms = ReductAxioms {
    assoc: "mul-assoc",
    quasi_inverse: "mul-quasi-inverse",
    involution: "star-involution",
    antimorphism: "star-antimorphism",
};

/// Axiom names for the additive reduct `(S, +, −)` of a weak ⋆-brace.
pub const ADD_AXIOMS: ReductAxioms = ReductAxioms {
    assoc: "add-assoc",
    quasi_inverse: "add-quasi-inverse",
    involution: "neg-involution",
    antimorphism: "neg-antimorphism",
};

/// First failing regular ⋆-semigroup axiom of the pair `(op, inv)`, or
/// `None` when the pair is a valid reduct. The axioms are checked in a
/// fixed order so witnesses are reproducible: associativity, then
/// `x·x'·x = x`, then `x'' = x`, then `(xy)' = y'x'` (writing `'` for
/// the unary operation), each scanned lexicographically.
pub fn reduct_witness(op: &BinOp, inv: &UnOp, axioms: &ReductAxioms) -> Option<Witness> {
    if let Some(w) = associativity_check(op, axioms.assoc) {
        return Some(w);
    }
    let n = op.order();
    for x in 0..n {
        let lhs = op.get(op.get(x, inv.get(x)), x);
        if lhs != x {
            return Some(Witness::new(axioms.quasi_inverse, vec![x], lhs, x));
        }
    }
    for x in 0..n {
        let lhs = inv.get(inv.get(x));
        if lhs != x {
            return Some(Witness::new(axioms.involution, vec![x], lhs, x));
        }
    }
    for x in 0..n {
        for y in 0..n {
            let lhs = inv.get(op.get(x, y));
            let rhs = op.get(inv.get(y), inv.get(x));
            if lhs != rhs {
                return Some(Witness::new(axioms.antimorphism, vec![x, y], lhs, rhs));
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StarError {
    #[error("multiplication has order {mul} but star has order {star}")]
    OrderMismatch { mul: usize, star: usize },
    #[error("{0}")]
    Axiom(Witness),
}

/// A validated finite regular ⋆-semigroup on `{0, .., n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StarSemigroup {
    mul: BinOp,
    star: UnOp,
}

/// Green's equivalences considered here. `H` is the intersection of `L`
/// and `R`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GreenRelation {
    L,
    R,
    H,
}

/// Partition of the carrier into Green's classes. Classes are sorted by
/// least element and each class is sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreenPartition {
    pub relation: GreenRelation,
    pub classes: Vec<Vec<Element>>,
}

impl GreenPartition {
    pub fn class_of(&self, a: Element) -> &[Element] {
        self.classes
            .iter()
            .find(|c| c.contains(&a))
            .map(|c| c.as_slice())
            .expect("every element lies in some class")
    }
}

/// Definitional classification of a regular ⋆-semigroup. Every flag is
/// computed from the textbook definition of its class; the failing
/// witness uses the definition's own quantifiers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    pub commutative: Flag,
    pub star_identity: Flag,
    pub inverse: Flag,
    pub orthodox: Flag,
    pub completely_regular: Flag,
    pub locally_inverse: Flag,
    pub clifford: Flag,
    pub idempotents: Vec<Element>,
    pub projections: Vec<Element>,
    /// Two-sided multiplicative identity, when one exists.
    pub identity: Option<Element>,
}

impl ClassReport {
    pub fn cr_li(&self) -> bool {
        self.completely_regular.holds && self.locally_inverse.holds
    }

    pub fn o_li(&self) -> bool {
        self.orthodox.holds && self.locally_inverse.holds
    }

    /// Completely regular, orthodox and locally inverse all at once.
    pub fn cro_li(&self) -> bool {
        self.completely_regular.holds && self.orthodox.holds && self.locally_inverse.holds
    }

    pub fn is_monoid(&self) -> bool {
        self.identity.is_some()
    }
}

/// Outcome of comparing one equational characterisation against the
/// definitional verdict of the class it describes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaCheck {
    pub id: String,
    pub consistent: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrosscheckReport {
    pub checks: Vec<LemmaCheck>,
}

impl CrosscheckReport {
    pub fn all_consistent(&self) -> bool {
        self.checks.iter().all(|c| c.consistent)
    }

    pub fn assert_consistent(&self) -> Result<(), ConsistencyError> {
        match self.checks.iter().find(|c| !c.consistent) {
            None => Ok(()),
            Some(c) => Err(ConsistencyError::new(c.id.clone(), c.detail.clone())),
        }
    }
}

/// One identity of a conditional identity suite. `applicable` records
/// whether the hypothesis of the identity's group held; inapplicable
/// items pass vacuously.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteItem {
    pub id: String,
    pub applicable: bool,
    pub flag: Flag,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub items: Vec<SuiteItem>,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|i| i.flag.holds)
    }

    pub fn item(&self, id: &str) -> Option<&SuiteItem> {
        self.items.iter().find(|i| i.id == id)
    }

    pub fn first_failure(&self) -> Option<&SuiteItem> {
        self.items.iter().find(|i| !i.flag.holds)
    }
}

pub(crate) fn suite_item(
    id: &str,
    applicable: bool,
    check: impl FnOnce() -> Option<Witness>,
) -> SuiteItem {
    let flag = if applicable {
        Flag::from_witness(check())
    } else {
        Flag::ok()
    };
    SuiteItem {
        id: id.to_string(),
        applicable,
        flag,
    }
}

impl StarSemigroup {
    /// Validates the pair as a regular ⋆-semigroup. On failure the error
    /// carries the first violated axiom with a witness.
    pub fn new(mul: BinOp, star: UnOp) -> Result<Self, StarError> {
        if mul.order() != star.order() {
            return Err(StarError::OrderMismatch {
                mul: mul.order(),
                star: star.order(),
            });
        }
        if let Some(w) = reduct_witness(&mul, &star, &MUL_AXIOMS) {
            return Err(StarError::Axiom(w));
        }
        Ok(StarSemigroup { mul, star })
    }

    pub fn order(&self) -> usize {
        self.mul.order()
    }

    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.mul.get(a, b)
    }

    pub fn star(&self, a: Element) -> Element {
        self.star.get(a)
    }

    pub fn mul_table(&self) -> &BinOp {
        &self.mul
    }

    pub fn star_table(&self) -> &UnOp {
        &self.star
    }

    /// Product of a nonempty word, left to right.
    pub fn prod(&self, word: &[Element]) -> Element {
        word.iter()
            .copied()
            .reduce(|a, b| self.mul(a, b))
            .expect("empty product")
    }

    pub fn is_idempotent(&self, a: Element) -> bool {
        self.mul(a, a) == a
    }

    pub fn is_projection(&self, a: Element) -> bool {
        self.is_idempotent(a) && self.star(a) == a
    }

    pub fn idempotents(&self) -> Vec<Element> {
        (0..self.order()).filter(|&a| self.is_idempotent(a)).collect()
    }

    pub fn projections(&self) -> Vec<Element> {
        (0..self.order()).filter(|&a| self.is_projection(a)).collect()
    }

    /// Two-sided identity element, when one exists.
    pub fn identity(&self) -> Option<Element> {
        (0..self.order())
            .find(|&e| (0..self.order()).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    /// All inverses of `a` under `op`-style regularity: elements `b`
    /// with `aba = a` and `bab = b`.
    pub fn inverses_of(&self, a: Element) -> Vec<Element> {
        inverses_in(&self.mul, a)
    }

    /// Projections and idempotents, guarded by the structural facts
    /// `P = {x x⋆} = {x⋆ x}` and `E = P · P`. Returns `(projections,
    /// idempotents)`; a violation of either fact is a consistency
    /// failure, not a property verdict.
    pub fn projection_sets(&self) -> Result<(Vec<Element>, Vec<Element>), ConsistencyError> {
        let projections = self.projections();
        let idempotents = self.idempotents();

        let mut left_forms: Vec<Element> =
            (0..self.order()).map(|x| self.mul(x, self.star(x))).collect();
        left_forms.sort_unstable();
        left_forms.dedup();
        if left_forms != projections {
            return Err(ConsistencyError::new(
                "projections-as-products",
                format!(
                    "{{x x*}} = {:?} but the fixed idempotents are {:?}",
                    left_forms, projections
                ),
            ));
        }

        let mut right_forms: Vec<Element> =
            (0..self.order()).map(|x| self.mul(self.star(x), x)).collect();
        right_forms.sort_unstable();
        right_forms.dedup();
        if right_forms != projections {
            return Err(ConsistencyError::new(
                "projections-as-products",
                format!(
                    "{{x* x}} = {:?} but the fixed idempotents are {:?}",
                    right_forms, projections
                ),
            ));
        }

        let mut products: Vec<Element> = projections
            .iter()
            .flat_map(|&e| projections.iter().map(move |&f| self.mul(e, f)))
            .collect();
        products.sort_unstable();
        products.dedup();
        if products != idempotents {
            return Err(ConsistencyError::new(
                "idempotents-as-projection-products",
                format!(
                    "P·P = {:?} but the idempotents are {:?}",
                    products, idempotents
                ),
            ));
        }

        Ok((projections, idempotents))
    }

    fn le_l(&self, a: Element, b: Element) -> bool {
        a == b || (0..self.order()).any(|u| self.mul(u, b) == a)
    }

    fn le_r(&self, a: Element, b: Element) -> bool {
        a == b || (0..self.order()).any(|u| self.mul(b, u) == a)
    }

    fn l_related_div(&self, a: Element, b: Element) -> bool {
        self.le_l(a, b) && self.le_l(b, a)
    }

    fn r_related_div(&self, a: Element, b: Element) -> bool {
        self.le_r(a, b) && self.le_r(b, a)
    }

    fn h_related_div(&self, a: Element, b: Element) -> bool {
        self.l_related_div(a, b) && self.r_related_div(a, b)
    }

    fn related_projection(&self, rel: GreenRelation, a: Element, b: Element) -> bool {
        let l = || self.mul(self.star(a), a) == self.mul(self.star(b), b);
        let r = || self.mul(a, self.star(a)) == self.mul(b, self.star(b));
        match rel {
            GreenRelation::L => l(),
            GreenRelation::R => r(),
            GreenRelation::H => l() && r(),
        }
    }

    fn related_div(&self, rel: GreenRelation, a: Element, b: Element) -> bool {
        match rel {
            GreenRelation::L => self.l_related_div(a, b),
            GreenRelation::R => self.r_related_div(a, b),
            GreenRelation::H => self.h_related_div(a, b),
        }
    }

    /// Partition of the carrier by the chosen Green's relation.
    ///
    /// Classes are computed from the projection criterion (`a R b` iff
    /// `a a⋆ = b b⋆`, `a L b` iff `a⋆ a = b⋆ b`, `H = L ∩ R`) and every
    /// pair is cross-checked against mutual divisibility; the two
    /// descriptions agree on every regular ⋆-semigroup, so a mismatch is
    /// a consistency failure.
    pub fn green(&self, relation: GreenRelation) -> Result<GreenPartition, ConsistencyError> {
        let n = self.order();
        for a in 0..n {
            for b in 0..n {
                let eq = self.related_projection(relation, a, b);
                let div = self.related_div(relation, a, b);
                if eq != div {
                    return Err(ConsistencyError::new(
                        "green-projection-criterion",
                        format!(
                            "{:?}-relation disagrees at pair ({}, {}): projection criterion {}, divisibility {}",
                            relation, a, b, eq, div
                        ),
                    ));
                }
            }
        }
        let mut classes: Vec<Vec<Element>> = Vec::new();
        let mut assigned = vec![false; n];
        for a in 0..n {
            if assigned[a] {
                continue;
            }
            let class: Vec<Element> = (a..n)
                .filter(|&b| self.related_projection(relation, a, b))
                .collect();
            for &b in &class {
                assigned[b] = true;
            }
            classes.push(class);
        }
        Ok(GreenPartition { relation, classes })
    }

    fn commutative_flag(&self) -> Flag {
        let n = self.order();
        for a in 0..n {
            for b in 0..n {
                let lhs = self.mul(a, b);
                let rhs = self.mul(b, a);
                if lhs != rhs {
                    return Flag::fail(Witness::new("commutativity", vec![a, b], lhs, rhs));
                }
            }
        }
        Flag::ok()
    }

    fn star_identity_flag(&self) -> Flag {
        for a in 0..self.order() {
            let lhs = self.star(a);
            if lhs != a {
                return Flag::fail(Witness::new("star-identity", vec![a], lhs, a));
            }
        }
        Flag::ok()
    }

    fn inverse_flag(&self) -> Flag {
        for a in 0..self.order() {
            let invs = self.inverses_of(a);
            debug_assert!(!invs.is_empty(), "regular elements have inverses");
            if invs.len() > 1 {
                return Flag::fail(Witness::new("unique-inverse", vec![a], invs[0], invs[1]));
            }
        }
        Flag::ok()
    }

    fn orthodox_flag(&self) -> Flag {
        let idem = self.idempotents();
        for &e in &idem {
            for &f in &idem {
                let ef = self.mul(e, f);
                let sq = self.mul(ef, ef);
                if sq != ef {
                    return Flag::fail(Witness::new("idempotents-closed", vec![e, f], ef, sq));
                }
            }
        }
        Flag::ok()
    }

    fn completely_regular_flag(&self) -> Flag {
        for a in 0..self.order() {
            let sq = self.mul(a, a);
            if !self.h_related_div(a, sq) {
                return Flag::fail(Witness::new("square-h-class", vec![a], a, sq));
            }
        }
        Flag::ok()
    }

    fn locally_inverse_flag(&self) -> Flag {
        for e in self.idempotents() {
            // Local submonoid eSe with induced multiplication.
            let local: Vec<Element> = {
                let mut v: Vec<Element> = (0..self.order())
                    .map(|x| self.mul(self.mul(e, x), e))
                    .collect();
                v.sort_unstable();
                v.dedup();
                v
            };
            for &a in &local {
                let invs: Vec<Element> = local
                    .iter()
                    .copied()
                    .filter(|&b| {
                        self.mul(self.mul(a, b), a) == a && self.mul(self.mul(b, a), b) == b
                    })
                    .collect();
                debug_assert!(!invs.is_empty(), "local submonoids of regular ⋆-semigroups are regular");
                if invs.len() > 1 {
                    return Flag::fail(Witness::new(
                        "local-unique-inverse",
                        vec![e, a],
                        invs[0],
                        invs[1],
                    ));
                }
            }
        }
        Flag::ok()
    }

    fn clifford_flag(&self) -> Flag {
        for e in self.idempotents() {
            for x in 0..self.order() {
                let lhs = self.mul(e, x);
                let rhs = self.mul(x, e);
                if lhs != rhs {
                    return Flag::fail(Witness::new("central-idempotents", vec![e, x], lhs, rhs));
                }
            }
        }
        Flag::ok()
    }

    /// Classifies the semigroup from the definitions of the classes, not
    /// from the projection equations. See
    /// [`StarSemigroup::equational_crosscheck`] for the comparison with
    /// the equational characterisations.
    pub fn classify(&self) -> ClassReport {
        ClassReport {
            commutative: self.commutative_flag(),
            star_identity: self.star_identity_flag(),
            inverse: self.inverse_flag(),
            orthodox: self.orthodox_flag(),
            completely_regular: self.completely_regular_flag(),
            locally_inverse: self.locally_inverse_flag(),
            clifford: self.clifford_flag(),
            idempotents: self.idempotents(),
            projections: self.projections(),
            identity: self.identity(),
        }
    }

    fn holds2(&self, f: impl Fn(Element, Element) -> bool) -> bool {
        let n = self.order();
        (0..n).all(|x| (0..n).all(|y| f(x, y)))
    }

    fn holds3(&self, f: impl Fn(Element, Element, Element) -> bool) -> bool {
        let n = self.order();
        (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| f(x, y, z))))
    }

    /// Compares the definitional classification against each equational
    /// characterisation of the same class. Every check records both
    /// verdicts; a crate in working order produces only consistent
    /// checks.
    pub fn equational_crosscheck(&self) -> CrosscheckReport {
        let report = self.classify();
        let p = self.projections();
        let mut checks = Vec::new();

        let all_pairs_p = |f: &dyn Fn(Element, Element) -> bool| {
            p.iter().all(|&e| p.iter().all(|&g| f(e, g)))
        };
        let all_triples_p = |f: &dyn Fn(Element, Element, Element) -> bool| {
            p.iter()
                .all(|&e| p.iter().all(|&g| p.iter().all(|&h| f(e, g, h))))
        };

        let check = |id: &str, definitional: bool, equational: bool| LemmaCheck {
            id: id.to_string(),
            consistent: definitional == equational,
            detail: format!("definitional={} equational={}", definitional, equational),
        };

        // Inverse iff projections commute pairwise.
        checks.push(check(
            "L2.5",
            report.inverse.holds,
            all_pairs_p(&|e, f| self.mul(e, f) == self.mul(f, e)),
        ));

        // Orthodox iff every product of three projections is idempotent.
        checks.push(check(
            "L2.6",
            report.orthodox.holds,
            all_triples_p(&|e, f, g| {
                let efg = self.prod(&[e, f, g]);
                self.is_idempotent(efg)
            }),
        ));

        // Completely regular iff xx⋆ = (xx⋆)(x⋆x)(xx⋆), equivalently
        // x⋆x = (x⋆x)(xx⋆)(x⋆x): the two canonical projections of x are
        // mutually inverse idempotents.
        let cr_a = (0..self.order()).all(|x| {
            let s = self.star(x);
            self.mul(x, s) == self.prod(&[x, s, s, x, x, s])
        });
        let cr_b = (0..self.order()).all(|x| {
            let s = self.star(x);
            self.mul(s, x) == self.prod(&[s, x, x, s, s, x])
        });
        checks.push(LemmaCheck {
            id: "L2.7".to_string(),
            consistent: report.completely_regular.holds == cr_a && cr_a == cr_b,
            detail: format!(
                "definitional={} equational={} dual={}",
                report.completely_regular.holds, cr_a, cr_b
            ),
        });

        // Locally inverse iff e f e g e = e g e f e on projections.
        checks.push(check(
            "L2.8",
            report.locally_inverse.holds,
            all_triples_p(&|e, f, g| self.prod(&[e, f, e, g, e]) == self.prod(&[e, g, e, f, e])),
        ));

        // Completely regular and locally inverse iff x x⋆ y⋆ y x y = xy.
        checks.push(check(
            "L2.9",
            report.cr_li(),
            self.holds2(|x, y| {
                self.prod(&[x, self.star(x), self.star(y), y, x, y]) == self.mul(x, y)
            }),
        ));

        // Orthodox and locally inverse iff a f g b = a g f b for
        // projections f, g.
        checks.push(check(
            "L2.10",
            report.o_li(),
            self.holds2(|a, b| {
                p.iter().all(|&f| {
                    p.iter()
                        .all(|&g| self.prod(&[a, f, g, b]) == self.prod(&[a, g, f, b]))
                })
            }),
        ));

        // Completely regular, orthodox and locally inverse iff any of
        // six equivalent identities.
        let forms = [
            self.holds2(|x, y| self.mul(x, y) == self.prod(&[x, x, self.star(x), y])),
            self.holds2(|x, y| self.mul(y, x) == self.prod(&[y, self.star(x), x, x])),
            self.holds3(|x, y, z| self.prod(&[x, y, z]) == self.prod(&[x, y, x, self.star(x), z])),
            self.holds3(|x, y, z| self.prod(&[z, y, x]) == self.prod(&[z, self.star(x), x, y, x])),
            self.holds3(|x, y, z| self.prod(&[x, y, z]) == self.prod(&[x, y, self.star(x), x, z])),
            self.holds3(|x, y, z| self.prod(&[z, y, x]) == self.prod(&[z, x, self.star(x), y, x])),
        ];
        checks.push(LemmaCheck {
            id: "L2.11".to_string(),
            consistent: forms.iter().all(|&f| f == report.cro_li()),
            detail: format!("definitional={} equational={:?}", report.cro_li(), forms),
        });

        // Clifford iff x x⋆ = x⋆ x iff completely regular and inverse.
        let cl_eq = (0..self.order()).all(|x| self.mul(x, self.star(x)) == self.mul(self.star(x), x));
        let cl_cr_inv = report.completely_regular.holds && report.inverse.holds;
        checks.push(LemmaCheck {
            id: "L2.13".to_string(),
            consistent: report.clifford.holds == cl_eq && cl_eq == cl_cr_inv,
            detail: format!(
                "definitional={} equational={} via-classes={}",
                report.clifford.holds, cl_eq, cl_cr_inv
            ),
        });

        CrosscheckReport { checks }
    }

    /// Conditional identity suite. Identities that follow from being
    /// completely regular, orthodox and locally inverse are checked when
    /// that hypothesis holds; identities following from `x = x⋆` and the
    /// monoid law `1⋆ = 1` are checked under their own hypotheses.
    /// Inapplicable items pass vacuously and are marked as such.
    pub fn identity_suite(&self) -> SuiteReport {
        let report = self.classify();
        let mut items = Vec::new();
        let s = |x: Element| self.star(x);

        let cro = report.cro_li();
        let cro_item =
            |id: &str, lhs: &dyn Fn(Element, Element, Element) -> Element,
             rhs: &dyn Fn(Element, Element, Element) -> Element| {
                suite_item(id, cro, || {
                    let n = self.order();
                    for x in 0..n {
                        for y in 0..n {
                            for z in 0..n {
                                let l = lhs(x, y, z);
                                let r = rhs(x, y, z);
                                if l != r {
                                    return Some(Witness::new(id, vec![x, y, z], l, r));
                                }
                            }
                        }
                    }
                    None
                })
            };

        items.push(cro_item(
            "xyx*xz=xyz",
            &|x, y, z| self.prod(&[x, y, s(x), x, z]),
            &|x, y, z| self.prod(&[x, y, z]),
        ));
        items.push(cro_item(
            "xyz=xyxx*z",
            &|x, y, z| self.prod(&[x, y, z]),
            &|x, y, z| self.prod(&[x, y, x, s(x), z]),
        ));
        items.push(cro_item(
            "zxx*yx=zyx",
            &|x, y, z| self.prod(&[z, x, s(x), y, x]),
            &|x, y, z| self.prod(&[z, y, x]),
        ));
        items.push(cro_item(
            "zyx=zx*xyx",
            &|x, y, z| self.prod(&[z, y, x]),
            &|x, y, z| self.prod(&[z, s(x), x, y, x]),
        ));
        items.push(cro_item(
            "x*yx*xz=x*yz",
            &|x, y, z| self.prod(&[s(x), y, s(x), x, z]),
            &|x, y, z| self.prod(&[s(x), y, z]),
        ));
        items.push(cro_item(
            "x*yz=x*yxx*z",
            &|x, y, z| self.prod(&[s(x), y, z]),
            &|x, y, z| self.prod(&[s(x), y, x, s(x), z]),
        ));
        items.push(cro_item(
            "zxx*yx*=zyx*",
            &|x, y, z| self.prod(&[z, x, s(x), y, s(x)]),
            &|x, y, z| self.prod(&[z, y, s(x)]),
        ));
        items.push(cro_item(
            "zyx*=zx*xyx*",
            &|x, y, z| self.prod(&[z, y, s(x)]),
            &|x, y, z| self.prod(&[z, s(x), x, y, s(x)]),
        ));
        items.push(cro_item(
            "xyy*z=xy*yz",
            &|x, y, z| self.prod(&[x, y, s(y), z]),
            &|x, y, z| self.prod(&[x, s(y), y, z]),
        ));

        let fixed = report.star_identity.holds;
        items.push(suite_item("xxx=x", fixed, || {
            (0..self.order()).find_map(|x| {
                let cube = self.prod(&[x, x, x]);
                (cube != x).then(|| Witness::new("xxx=x", vec![x], cube, x))
            })
        }));
        items.push(suite_item("xy=yx", fixed, || {
            let n = self.order();
            for x in 0..n {
                for y in 0..n {
                    let l = self.mul(x, y);
                    let r = self.mul(y, x);
                    if l != r {
                        return Some(Witness::new("xy=yx", vec![x, y], l, r));
                    }
                }
            }
            None
        }));

        items.push(suite_item("1*=1", report.identity.is_some(), || {
            let one = report.identity.expect("guarded by applicability");
            let starred = self.star(one);
            (starred != one).then(|| Witness::new("1*=1", vec![one], starred, one))
        }));

        SuiteReport { items }
    }
}

/// All inverses of `a` in a plain semigroup table: elements `b` with
/// `aba = a` and `bab = b`.
pub fn inverses_in(op: &BinOp, a: Element) -> Vec<Element> {
    (0..op.order())
        .filter(|&b| op.get(op.get(a, b), a) == a && op.get(op.get(b, a), b) == b)
        .collect()
}

/// True when the table is an inverse semigroup: associative and every
/// element has exactly one inverse.
pub fn semigroup_is_inverse(op: &BinOp) -> bool {
    associativity_check(op, "assoc").is_none()
        && (0..op.order()).all(|a| inverses_in(op, a).len() == 1)
}
