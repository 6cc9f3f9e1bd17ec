//! Finite operation tables and the canonical encoding used for
//! isomorphism rejection.
//!
//! All algebras in this crate live on the carrier `{0, .., n-1}`. A
//! binary operation is a flat row-major table with the row index as the
//! left operand; a unary operation is a flat vector. Entries are checked
//! at construction, so lookups never leave the carrier.

use itertools::Itertools;
use std::fmt;
use thiserror::Error;

/// Index into the carrier `{0, .., n-1}` of a finite algebra.
pub type Element = usize;

/// Largest order accepted by [`canonical_encoding`]. The encoding
/// minimises over all `n!` simultaneous relabelings, which stays cheap
/// up to `6! = 720` permutations.
pub const MAX_CANONICAL_ORDER: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("entry at row {row}, column {col} is {value}, which is not below the order {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("entry at position {pos} is {value}, which is not below the order {order}")]
    UnaryOutOfRange {
        pos: usize,
        value: usize,
        order: usize,
    },
    #[error("expected {expected} entries for order {order}, got {got}")]
    WrongLength {
        order: usize,
        expected: usize,
        got: usize,
    },
    #[error("order {order} exceeds the canonical encoding bound {bound}")]
    OrderTooLarge { order: usize, bound: usize },
}

/// Total binary operation on `{0, .., n-1}` stored as a flat row-major
/// table. `get(a, b)` reads the row of the left operand `a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinOp {
    order: usize,
    entries: Vec<Element>,
}

impl BinOp {
    pub fn new(order: usize, entries: Vec<Element>) -> Result<Self, TableError> {
        if entries.len() != order * order {
            return Err(TableError::WrongLength {
                order,
                expected: order * order,
                got: entries.len(),
            });
        }
        for (pos, &value) in entries.iter().enumerate() {
            if value >= order {
                return Err(TableError::EntryOutOfRange {
                    row: pos / order,
                    col: pos % order,
                    value,
                    order,
                });
            }
        }
        Ok(BinOp { order, entries })
    }

    /// Builds the table by evaluating `f` on every pair in row-major
    /// order. Panics if `f` leaves the carrier; use [`BinOp::new`] for
    /// untrusted data.
    pub fn from_fn(order: usize, mut f: impl FnMut(Element, Element) -> Element) -> Self {
        let mut entries = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                entries.push(f(a, b));
            }
        }
        BinOp::new(order, entries).expect("from_fn produced an out-of-range entry")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, a: Element, b: Element) -> Element {
        self.entries[a * self.order + b]
    }

    pub fn row(&self, a: Element) -> &[Element] {
        &self.entries[a * self.order..(a + 1) * self.order]
    }

    pub fn column(&self, b: Element) -> Vec<Element> {
        (0..self.order).map(|a| self.get(a, b)).collect()
    }

    pub fn entries(&self) -> &[Element] {
        &self.entries
    }

    /// The same operation after renaming every element by the
    /// permutation `p`, so that `p` becomes an isomorphism from `self`
    /// to the result.
    pub fn relabel(&self, p: &[Element]) -> BinOp {
        let inv = invert(p);
        BinOp::from_fn(self.order, |a, b| p[self.get(inv[a], inv[b])])
    }
}

/// Total unary operation on `{0, .., n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnOp {
    order: usize,
    entries: Vec<Element>,
}

impl UnOp {
    pub fn new(order: usize, entries: Vec<Element>) -> Result<Self, TableError> {
        if entries.len() != order {
            return Err(TableError::WrongLength {
                order,
                expected: order,
                got: entries.len(),
            });
        }
        for (pos, &value) in entries.iter().enumerate() {
            if value >= order {
                return Err(TableError::UnaryOutOfRange { pos, value, order });
            }
        }
        Ok(UnOp { order, entries })
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(Element) -> Element) -> Self {
        let entries = (0..order).map(&mut f).collect();
        UnOp::new(order, entries).expect("from_fn produced an out-of-range entry")
    }

    pub fn identity(order: usize) -> Self {
        UnOp::from_fn(order, |x| x)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, a: Element) -> Element {
        self.entries[a]
    }

    pub fn entries(&self) -> &[Element] {
        &self.entries
    }

    pub fn is_permutation(&self) -> bool {
        bijection_check(&self.entries, self.order)
    }

    /// True when the map is its own inverse.
    pub fn is_involution(&self) -> bool {
        (0..self.order).all(|x| self.get(self.get(x)) == x)
    }

    pub fn relabel(&self, p: &[Element]) -> UnOp {
        let inv = invert(p);
        UnOp::from_fn(self.order, |a| p[self.get(inv[a])])
    }
}

/// Counterexample to a universally quantified equation: the tuple that
/// instantiates the variables plus the two evaluated sides, which always
/// differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// Identifier of the violated law.
    pub axiom: String,
    /// Values of the quantified variables, in quantifier order.
    pub tuple: Vec<Element>,
    pub lhs: Element,
    pub rhs: Element,
}

impl Witness {
    pub fn new(axiom: impl Into<String>, tuple: Vec<Element>, lhs: Element, rhs: Element) -> Self {
        debug_assert!(lhs != rhs, "a witness must separate the two sides");
        Witness {
            axiom: axiom.into(),
            tuple,
            lhs,
            rhs,
        }
    }
}

impl fmt::Display for Witness {
    /// Renders as `WITNESS axiom=<id> tuple=(i,j,k) lhs=<e> rhs=<e>`
    /// with 0-based elements.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "WITNESS axiom={} tuple=({}) lhs={} rhs={}",
            self.axiom,
            self.tuple.iter().join(","),
            self.lhs,
            self.rhs
        )
    }
}

/// Verdict of one universally quantified check: either it holds, or it
/// fails with the first counterexample in scan order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flag {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Flag {
    pub fn ok() -> Self {
        Flag {
            holds: true,
            witness: None,
        }
    }

    pub fn fail(witness: Witness) -> Self {
        Flag {
            holds: false,
            witness: Some(witness),
        }
    }

    pub fn from_witness(witness: Option<Witness>) -> Self {
        match witness {
            None => Flag::ok(),
            Some(w) => Flag::fail(w),
        }
    }
}

/// First associativity failure of `op` in lexicographic `(a, b, c)`
/// order, tagged with the given axiom identifier.
pub fn associativity_check(op: &BinOp, axiom: &str) -> Option<Witness> {
    let n = op.order();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = op.get(op.get(a, b), c);
                let rhs = op.get(a, op.get(b, c));
                if lhs != rhs {
                    return Some(Witness::new(axiom, vec![a, b, c], lhs, rhs));
                }
            }
        }
    }
    None
}

/// True when `values` lists every element of `{0, .., order-1}` exactly
/// once.
pub fn bijection_check(values: &[Element], order: usize) -> bool {
    if values.len() != order {
        return false;
    }
    let mut seen = vec![false; order];
    for &v in values {
        if v >= order || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

/// Inverse of a permutation given as `p[i] = image of i`.
pub fn invert(p: &[Element]) -> Vec<Element> {
    let mut inv = vec![0; p.len()];
    for (i, &v) in p.iter().enumerate() {
        inv[v] = i;
    }
    inv
}

/// One table of a bundle handed to [`canonical_encoding`] or
/// [`raw_encoding`].
#[derive(Debug, Clone, Copy)]
pub enum TableRef<'a> {
    Bin(&'a BinOp),
    Un(&'a UnOp),
}

impl TableRef<'_> {
    fn order(&self) -> usize {
        match self {
            TableRef::Bin(b) => b.order(),
            TableRef::Un(u) => u.order(),
        }
    }
}

/// Concatenated row-major byte encoding of the bundle without any
/// relabeling. Used for stable ordering of labeled models.
pub fn raw_encoding(tables: &[TableRef<'_>]) -> Vec<u8> {
    let mut enc = Vec::new();
    for t in tables {
        match t {
            TableRef::Bin(b) => enc.extend(b.entries().iter().map(|&v| v as u8)),
            TableRef::Un(u) => enc.extend(u.entries().iter().map(|&v| v as u8)),
        }
    }
    enc
}

/// Lexicographically least concatenated row-major encoding of the
/// bundle over all `order!` simultaneous relabelings.
///
/// Two bundles of the same shape receive equal encodings exactly when a
/// single permutation maps every table of one onto the corresponding
/// table of the other, so the encoding is a complete isomorphism
/// invariant for the bundled structure.
pub fn canonical_encoding(tables: &[TableRef<'_>], order: usize) -> Result<Vec<u8>, TableError> {
    if order > MAX_CANONICAL_ORDER {
        return Err(TableError::OrderTooLarge {
            order,
            bound: MAX_CANONICAL_ORDER,
        });
    }
    debug_assert!(tables.iter().all(|t| t.order() == order));
    let mut best: Option<Vec<u8>> = None;
    for p in (0..order).permutations(order) {
        let inv = invert(&p);
        let mut enc = Vec::new();
        for t in tables {
            match t {
                TableRef::Bin(b) => {
                    for x in 0..order {
                        for y in 0..order {
                            enc.push(p[b.get(inv[x], inv[y])] as u8);
                        }
                    }
                }
                TableRef::Un(u) => {
                    for x in 0..order {
                        enc.push(p[u.get(inv[x])] as u8);
                    }
                }
            }
        }
        if best.as_ref().is_none_or(|b| enc < *b) {
            best = Some(enc);
        }
    }
    // (0..0).permutations(0) still yields the empty permutation, so the
    // loop body runs at least once for every order.
    Ok(best.expect("the identity relabeling always exists"))
}
