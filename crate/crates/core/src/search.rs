//! Exhaustive enumeration of small models with isomorphism rejection.
//!
//! The enumerator fixes the star involution first (there are few
//! involutions per order), then fills the multiplication table in
//! row-major order. Each trial assignment propagates its forced
//! consequences: setting xy = c forces y⋆x⋆ = c⋆, and setting
//! x·x⋆ = p forces p·x = x. Associativity is checked over all fully
//! determined triples after every assignment, and the branch is
//! abandoned on the first conflict.
//!
//! Results are deduplicated by the joint canonical encoding of all
//! operation tables and emitted in ascending (order, canonical key)
//! order, so the output is deterministic and independent of the
//! number of workers. A brute-force oracle (`naive_star_semigroups`)
//! exists for cross-checking completeness at small orders.

use crate::semibrace::{induce_addition, AdditionKind, TwoTwoOneAlgebra};
use crate::star::StarSemigroup;
use crate::table::{canonical_encoding, BinOp, TableRef, UnOp, MAX_CANONICAL_ORDER};
use crate::wsb::{validate_wsb, WeakStarBrace, WsbError};
use crate::ybe::check_solution;
use crate::ConsistencyError;
use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use thiserror::Error;

/// Default upper order for CLI-driven searches.
pub const DEFAULT_ORDER_BOUND: usize = 4;
/// Absolute cap; canonical dedup enumerates all relabelings.
pub const HARD_ORDER_CAP: usize = MAX_CANONICAL_ORDER;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("order {order} exceeds the enumeration cap {cap}")]
    OrderBound { order: usize, cap: usize },
    #[error("orders must start at 1")]
    ZeroOrder,
    #[error("predicate {token:?} is both required and forbidden")]
    ConflictingPredicates { token: &'static str },
    #[error("worker count must be at least 1")]
    NoWorkers,
    #[error(transparent)]
    Consistency(#[from] ConsistencyError),
}

/// Constraints a model must satisfy or violate. Class predicates read
/// the classification of the multiplicative reduct; the solution
/// predicate evaluates the map derived from the given induced addition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Predicate {
    Inverse,
    Orthodox,
    CompletelyRegular,
    LocallyInverse,
    Clifford,
    Commutative,
    StarIdentity,
    CroLi,
    Solution(AdditionKind),
}

impl Predicate {
    /// The class predicates; solution predicates are parameterised and
    /// listed separately by [`Predicate::parse`].
    pub const ALL: [Predicate; 8] = [
        Predicate::Inverse,
        Predicate::Orthodox,
        Predicate::CompletelyRegular,
        Predicate::LocallyInverse,
        Predicate::Clifford,
        Predicate::Commutative,
        Predicate::StarIdentity,
        Predicate::CroLi,
    ];

    pub fn token(&self) -> &'static str {
        match self {
            Predicate::Inverse => "inverse",
            Predicate::Orthodox => "orthodox",
            Predicate::CompletelyRegular => "completely_regular",
            Predicate::LocallyInverse => "locally_inverse",
            Predicate::Clifford => "clifford",
            Predicate::Commutative => "commutative",
            Predicate::StarIdentity => "star_identity",
            Predicate::CroLi => "cro_li",
            Predicate::Solution(kind) => match kind {
                AdditionKind::Mul => "solution(mul)",
                AdditionKind::MulRev => "solution(mul-rev)",
                AdditionKind::StarStar => "solution(star-star)",
                AdditionKind::StarStarRev => "solution(star-star-rev)",
                AdditionKind::StarLeft => "solution(star-left)",
                AdditionKind::StarRight => "solution(star-right)",
                AdditionKind::RevStarLeft => "solution(rev-star-left)",
                AdditionKind::RevStarRight => "solution(rev-star-right)",
                AdditionKind::ProjLeft => "solution(proj-left)",
                AdditionKind::ProjRight => "solution(proj-right)",
                AdditionKind::ConjStar => "solution(conj-star)",
                AdditionKind::ConjStarRev => "solution(conj-star-rev)",
                AdditionKind::Conj => "solution(conj)",
                AdditionKind::ConjRev => "solution(conj-rev)",
            },
        }
    }

    /// Accepts the canonical token with either `_` or `-` separators;
    /// `solution(<kind>)` takes any addition-kind token.
    pub fn parse(token: &str) -> Option<Predicate> {
        if let Some(inner) = token
            .strip_prefix("solution(")
            .and_then(|rest| rest.strip_suffix(')'))
        {
            return AdditionKind::parse(&inner.replace('_', "-")).map(Predicate::Solution);
        }
        let normal = token.replace('-', "_");
        Predicate::ALL.into_iter().find(|p| p.token() == normal)
    }

    /// Evaluates the predicate on one model, given the classification
    /// of its multiplicative reduct.
    pub fn holds(
        &self,
        base: &StarSemigroup,
        report: &crate::star::ClassReport,
    ) -> Result<bool, ConsistencyError> {
        Ok(match self {
            Predicate::Inverse => report.inverse.holds,
            Predicate::Orthodox => report.orthodox.holds,
            Predicate::CompletelyRegular => report.completely_regular.holds,
            Predicate::LocallyInverse => report.locally_inverse.holds,
            Predicate::Clifford => report.clifford.holds,
            Predicate::Commutative => report.commutative.holds,
            Predicate::StarIdentity => report.star_identity.holds,
            Predicate::CroLi => report.cro_li(),
            Predicate::Solution(kind) => {
                check_solution(&induce_addition(base, *kind))?.is_solution
            }
        })
    }
}

/// What to enumerate. `Induced` derives the addition from the kind;
/// `FreeAdd` searches every associative addition over each base;
/// `Brace` searches additive star-semigroup structures over each base
/// and keeps the pairs that validate as weak left ⋆-braces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Signature {
    Star,
    Induced(AdditionKind),
    FreeAdd,
    Brace,
}

#[derive(Debug, Clone)]
pub struct SearchQuery {
    pub orders: RangeInclusive<usize>,
    pub signature: Signature,
    pub require: Vec<Predicate>,
    pub forbid: Vec<Predicate>,
    pub limit: Option<usize>,
    pub dedup_iso: bool,
}

impl SearchQuery {
    pub fn star_semigroups(orders: RangeInclusive<usize>) -> Self {
        SearchQuery {
            orders,
            signature: Signature::Star,
            require: Vec::new(),
            forbid: Vec::new(),
            limit: None,
            dedup_iso: true,
        }
    }

    pub fn with_signature(mut self, signature: Signature) -> Self {
        self.signature = signature;
        self
    }

    pub fn require(mut self, p: Predicate) -> Self {
        self.require.push(p);
        self
    }

    pub fn forbid(mut self, p: Predicate) -> Self {
        self.forbid.push(p);
        self
    }

    pub fn limit(mut self, limit: usize) -> Self {
        self.limit = Some(limit);
        self
    }

    pub fn keep_labeled(mut self) -> Self {
        self.dedup_iso = false;
        self
    }
}

#[derive(Debug, Clone)]
pub enum Model {
    Star(StarSemigroup),
    Algebra(TwoTwoOneAlgebra),
    Brace(WeakStarBrace),
}

impl Model {
    pub fn order(&self) -> usize {
        self.base().order()
    }

    /// The multiplicative reduct.
    pub fn base(&self) -> &StarSemigroup {
        match self {
            Model::Star(s) => s,
            Model::Algebra(a) => a.base(),
            Model::Brace(w) => w.multiplicative(),
        }
    }

    /// Joint canonical encoding of all operation tables: (mul, star)
    /// for plain structures, (mul, star, add) for algebras, and
    /// (add, neg, mul, star) for braces.
    pub fn canonical_key(&self) -> Vec<u8> {
        let order = self.order();
        let result = match self {
            Model::Star(s) => canonical_encoding(
                &[TableRef::Bin(s.mul_table()), TableRef::Un(s.star_table())],
                order,
            ),
            Model::Algebra(a) => canonical_encoding(
                &[
                    TableRef::Bin(a.base().mul_table()),
                    TableRef::Un(a.base().star_table()),
                    TableRef::Bin(a.add_table()),
                ],
                order,
            ),
            Model::Brace(w) => canonical_encoding(
                &[
                    TableRef::Bin(w.additive().mul_table()),
                    TableRef::Un(w.additive().star_table()),
                    TableRef::Bin(w.multiplicative().mul_table()),
                    TableRef::Un(w.multiplicative().star_table()),
                ],
                order,
            ),
        };
        result.expect("model order stays within the canonical cap")
    }
}

/// All involutions of {0, .., n-1} in a fixed recursive order: the
/// smallest unpaired point is either fixed or paired with each larger
/// point in turn.
pub(crate) fn involutions(n: usize) -> Vec<Vec<usize>> {
    fn extend(perm: &mut Vec<usize>, placed: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let i = match placed.iter().position(|&p| !p) {
            None => {
                out.push(perm.clone());
                return;
            }
            Some(i) => i,
        };
        placed[i] = true;
        perm[i] = i;
        extend(perm, placed, out);
        for j in i + 1..perm.len() {
            if !placed[j] {
                placed[j] = true;
                perm[i] = j;
                perm[j] = i;
                extend(perm, placed, out);
                placed[j] = false;
            }
        }
        placed[i] = false;
    }
    let mut out = Vec::new();
    extend(&mut vec![0; n], &mut vec![false; n], &mut out);
    out
}

/// Backtracking table filler. When `star` is present the mirror rule
/// (xy)⋆ = y⋆x⋆ and the quasi-inverse forcing x·x⋆ = p ⟹ p·x = x are
/// propagated; associativity over determined triples is always
/// enforced.
struct Filler<'a> {
    n: usize,
    star: Option<&'a [usize]>,
    table: Vec<Option<usize>>,
    trail: Vec<usize>,
}

impl<'a> Filler<'a> {
    fn new(n: usize, star: Option<&'a [usize]>) -> Self {
        Filler {
            n,
            star,
            table: vec![None; n * n],
            trail: Vec::new(),
        }
    }

    fn get(&self, a: usize, b: usize) -> Option<usize> {
        self.table[a * self.n + b]
    }

    /// Sets cell values following all forced consequences; false on
    /// conflict. Newly set cells are pushed onto the trail.
    fn assign(&mut self, cell: usize, value: usize) -> bool {
        let mut queue = vec![(cell, value)];
        while let Some((cell, value)) = queue.pop() {
            match self.table[cell] {
                Some(existing) => {
                    if existing != value {
                        return false;
                    }
                    continue;
                }
                None => {
                    self.table[cell] = Some(value);
                    self.trail.push(cell);
                }
            }
            let (a, b) = (cell / self.n, cell % self.n);
            if let Some(star) = self.star {
                queue.push((star[b] * self.n + star[a], star[value]));
                if b == star[a] {
                    // a a⋆ = value forces (a a⋆) a = a
                    queue.push((value * self.n + a, a));
                }
            }
        }
        true
    }

    /// Associativity over fully determined triples.
    fn consistent(&self) -> bool {
        for x in 0..self.n {
            for y in 0..self.n {
                let Some(xy) = self.get(x, y) else { continue };
                for z in 0..self.n {
                    let (Some(l), Some(yz)) = (self.get(xy, z), self.get(y, z)) else {
                        continue;
                    };
                    if let Some(r) = self.get(x, yz) {
                        if l != r {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn fill(&mut self, emit: &mut dyn FnMut(BinOp)) {
        let next = self.table.iter().position(|c| c.is_none());
        let Some(cell) = next else {
            let entries: Vec<usize> = self.table.iter().map(|c| c.unwrap()).collect();
            emit(BinOp::new(self.n, entries).expect("filled table is well formed"));
            return;
        };
        for value in 0..self.n {
            let mark = self.trail.len();
            if self.assign(cell, value) && self.consistent() {
                self.fill(emit);
            }
            while self.trail.len() > mark {
                let cell = self.trail.pop().unwrap();
                self.table[cell] = None;
            }
        }
    }
}

/// Every labeled regular ⋆-semigroup on {0, .., n-1} whose star is
/// one of the given involutions, in deterministic order.
fn labeled_star_semigroups_over(
    n: usize,
    stars: &[Vec<usize>],
    f: &mut dyn FnMut(StarSemigroup),
) {
    for star in stars {
        let mut filler = Filler::new(n, Some(star));
        filler.fill(&mut |mul| {
            let star = UnOp::new(n, star.clone()).expect("involution well formed");
            let s = StarSemigroup::new(mul, star).expect("enumerator output validates");
            f(s);
        });
    }
}

/// Every labeled regular ⋆-semigroup of the given order.
pub(crate) fn for_each_labeled_star_semigroup(n: usize, mut f: impl FnMut(StarSemigroup)) {
    labeled_star_semigroups_over(n, &involutions(n), &mut f);
}

/// Every labeled semigroup (associative table) of the given order.
pub(crate) fn for_each_labeled_semigroup(n: usize, mut f: impl FnMut(BinOp)) {
    let mut filler = Filler::new(n, None);
    filler.fill(&mut |t| f(t));
}

/// Brute-force oracle: all n^(n²) tables crossed with all involutions,
/// filtered by the full axiom validator. Practical for order ≤ 3 only.
pub fn naive_star_semigroups(n: usize) -> Vec<StarSemigroup> {
    let stars = involutions(n);
    let mut out = Vec::new();
    let cells = n * n;
    let mut digits = vec![0usize; cells];
    loop {
        if let Ok(mul) = BinOp::new(n, digits.clone()) {
            for star in &stars {
                let star = UnOp::new(n, star.clone()).expect("involution well formed");
                if let Ok(s) = StarSemigroup::new(mul.clone(), star) {
                    out.push(s);
                }
            }
        }
        // next table in base-n counting order
        let mut pos = cells;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < n {
                break;
            }
            digits[pos] = 0;
        }
    }
}

fn validate_query(query: &SearchQuery) -> Result<(), SearchError> {
    if *query.orders.start() == 0 {
        return Err(SearchError::ZeroOrder);
    }
    if *query.orders.end() > HARD_ORDER_CAP {
        return Err(SearchError::OrderBound {
            order: *query.orders.end(),
            cap: HARD_ORDER_CAP,
        });
    }
    for p in &query.require {
        if query.forbid.contains(p) {
            return Err(SearchError::ConflictingPredicates { token: p.token() });
        }
    }
    Ok(())
}

fn passes(
    query: &SearchQuery,
    base: &StarSemigroup,
    report: &crate::star::ClassReport,
) -> Result<bool, ConsistencyError> {
    for p in &query.require {
        if !p.holds(base, report)? {
            return Ok(false);
        }
    }
    for p in &query.forbid {
        if p.holds(base, report)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Models over one base semigroup, per the query signature.
fn models_over_base(
    query: &SearchQuery,
    base: StarSemigroup,
    out: &mut Vec<Model>,
) -> Result<(), SearchError> {
    let report = base.classify();
    if !passes(query, &base, &report)? {
        return Ok(());
    }
    match query.signature {
        Signature::Star => out.push(Model::Star(base)),
        Signature::Induced(kind) => out.push(Model::Algebra(induce_addition(&base, kind))),
        Signature::FreeAdd => {
            let n = base.order();
            let mut adds = Vec::new();
            for_each_labeled_semigroup(n, |add| adds.push(add));
            for add in adds {
                let alg = TwoTwoOneAlgebra::new(base.clone(), add).expect("orders match");
                out.push(Model::Algebra(alg));
            }
        }
        Signature::Brace => {
            let n = base.order();
            let mut reducts = Vec::new();
            for_each_labeled_star_semigroup(n, |s| reducts.push(s));
            for additive in reducts {
                let attempt = validate_wsb(
                    additive.mul_table().clone(),
                    additive.star_table().clone(),
                    base.mul_table().clone(),
                    base.star_table().clone(),
                );
                match attempt {
                    Ok(w) => out.push(Model::Brace(w)),
                    Err(WsbError::Axiom(_)) => {}
                    Err(WsbError::Consistency(c)) => return Err(SearchError::Consistency(c)),
                    Err(WsbError::OrderMismatch { .. }) => unreachable!("orders agree"),
                }
            }
        }
    }
    Ok(())
}

fn enumerate_order(
    query: &SearchQuery,
    n: usize,
    workers: usize,
) -> Result<Vec<(Vec<u8>, Model)>, SearchError> {
    let stars = involutions(n);
    let chunks: Vec<Vec<Vec<usize>>> = (0..workers)
        .map(|w| {
            stars
                .iter()
                .enumerate()
                .filter(|(i, _)| i % workers == w)
                .map(|(_, s)| s.clone())
                .collect()
        })
        .collect();

    let results: Vec<Result<Vec<Model>, SearchError>> = std::thread::scope(|scope| {
        let handles: Vec<_> = chunks
            .iter()
            .map(|chunk| {
                scope.spawn(move || {
                    let mut found = Vec::new();
                    let mut status = Ok(());
                    labeled_star_semigroups_over(n, chunk, &mut |base| {
                        if status.is_ok() {
                            status = models_over_base(query, base, &mut found);
                        }
                    });
                    status.map(|()| found)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("search worker panicked"))
            .collect()
    });

    let mut keyed = Vec::new();
    for result in results {
        for model in result? {
            keyed.push((model.canonical_key(), model));
        }
    }
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    if query.dedup_iso {
        let mut classes: BTreeMap<Vec<u8>, Model> = BTreeMap::new();
        for (key, model) in keyed {
            classes.entry(key).or_insert(model);
        }
        Ok(classes.into_iter().collect())
    } else {
        Ok(keyed)
    }
}

/// All matching models in ascending (order, canonical key) order. With
/// `dedup_iso` one representative per isomorphism class is kept, the
/// one with the smallest canonical key among those enumerated.
pub fn enumerate_models_with_workers(
    query: &SearchQuery,
    workers: usize,
) -> Result<Vec<Model>, SearchError> {
    if workers == 0 {
        return Err(SearchError::NoWorkers);
    }
    validate_query(query)?;
    let mut out = Vec::new();
    for n in query.orders.clone() {
        for (_, model) in enumerate_order(query, n, workers)? {
            out.push(model);
            if let Some(limit) = query.limit {
                if out.len() == limit {
                    return Ok(out);
                }
            }
        }
    }
    Ok(out)
}

pub fn enumerate_models(query: &SearchQuery) -> Result<Vec<Model>, SearchError> {
    enumerate_models_with_workers(query, 1)
}

/// First model in enumeration order, if any.
pub fn find_model(query: &SearchQuery) -> Result<Option<Model>, SearchError> {
    let limited = SearchQuery {
        limit: Some(1),
        ..query.clone()
    };
    Ok(enumerate_models(&limited)?.into_iter().next())
}
