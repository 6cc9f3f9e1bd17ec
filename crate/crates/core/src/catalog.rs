//! Built-in instances with fixed element orderings and labels.
//!
//! The catalog holds small structures used throughout the test suite
//! and the proposition registry: groups and bands with their natural
//! stars, two semibraces, three braces, and one intended
//! counterexample (`klein_rs`) that is stored as an algebra plus a
//! candidate negation precisely because it fails weak ⋆-brace
//! validation.
//!
//! Each entry carries a `source` tag in the same identifier scheme as
//! the proposition registry ("R3.7" is a remark, "E4.15" an example);
//! the invented baseline entry is tagged "baseline".

use crate::document::AlgebraDocument;
use crate::semibrace::TwoTwoOneAlgebra;
use crate::star::StarSemigroup;
use crate::table::{BinOp, UnOp};
use crate::wsb::{validate_wsb, WeakStarBrace};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown catalog entry {name:?}")]
    UnknownName { name: String },
}

/// The validated structure an entry provides. `AlgebraWithNeg` is the
/// counterexample shape: the algebra part validates, the candidate
/// negation is stored so brace validation can be shown to fail.
#[derive(Debug, Clone)]
pub enum CatalogStructure {
    Star(StarSemigroup),
    Algebra(TwoTwoOneAlgebra),
    Brace(WeakStarBrace),
    AlgebraWithNeg { algebra: TwoTwoOneAlgebra, neg: UnOp },
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    /// Statement tag, matching the proposition registry's identifier
    /// scheme where the entry instantiates a registered statement.
    pub source: &'static str,
    pub labels: Vec<String>,
    pub structure: CatalogStructure,
}

impl CatalogEntry {
    pub fn order(&self) -> usize {
        self.base().order()
    }

    /// The multiplicative reduct, whatever the structure kind.
    pub fn base(&self) -> &StarSemigroup {
        match &self.structure {
            CatalogStructure::Star(s) => s,
            CatalogStructure::Algebra(a) => a.base(),
            CatalogStructure::Brace(w) => w.multiplicative(),
            CatalogStructure::AlgebraWithNeg { algebra, .. } => algebra.base(),
        }
    }

    pub fn to_document(&self) -> AlgebraDocument {
        let doc = match &self.structure {
            CatalogStructure::Star(s) => AlgebraDocument::from_star_semigroup(self.name, s),
            CatalogStructure::Algebra(a) => AlgebraDocument::from_algebra(self.name, a),
            CatalogStructure::Brace(w) => AlgebraDocument::from_weak_star_brace(self.name, w),
            CatalogStructure::AlgebraWithNeg { algebra, neg } => {
                let mut doc = AlgebraDocument::from_algebra(self.name, algebra);
                doc.neg = Some(neg.entries().to_vec());
                doc
            }
        };
        doc.with_labels(self.labels.clone())
    }
}

fn bin(order: usize, rows: &[[usize; 8]]) -> BinOp {
    // Rows are padded to width 8; only the first `order` cells count.
    let entries = rows.iter().flat_map(|r| r[..order].to_vec()).collect();
    BinOp::new(order, entries).expect("catalog table well formed")
}

fn un(entries: &[usize]) -> UnOp {
    UnOp::new(entries.len(), entries.to_vec()).expect("catalog map well formed")
}

fn star_semigroup(mul: BinOp, star: UnOp) -> StarSemigroup {
    StarSemigroup::new(mul, star).expect("catalog reduct valid")
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

const P: usize = usize::MAX; // row padding, never read

fn c3() -> CatalogEntry {
    let mul = bin(
        3,
        &[
            [0, 1, 2, P, P, P, P, P],
            [1, 2, 0, P, P, P, P, P],
            [2, 0, 1, P, P, P, P, P],
        ],
    );
    CatalogEntry {
        name: "c3",
        description: "cyclic group of order 3 with star the group inverse",
        source: "R3.7",
        labels: labels(&["e", "x", "x2"]),
        structure: CatalogStructure::Star(star_semigroup(mul, un(&[0, 2, 1]))),
    }
}

fn c4_semibrace() -> CatalogEntry {
    let mul = bin(
        4,
        &[
            [0, 1, 2, 3, P, P, P, P],
            [1, 2, 3, 0, P, P, P, P],
            [2, 3, 0, 1, P, P, P, P],
            [3, 0, 1, 2, P, P, P, P],
        ],
    );
    let add = bin(
        4,
        &[
            [0, 0, 2, 2, P, P, P, P],
            [1, 1, 3, 3, P, P, P, P],
            [2, 2, 0, 0, P, P, P, P],
            [3, 3, 1, 1, P, P, P, P],
        ],
    );
    let base = star_semigroup(mul, un(&[0, 3, 2, 1]));
    CatalogEntry {
        name: "c4_semibrace",
        description: "left semibrace on the cyclic group of order 4: \
                      group multiplication with a non-cancellative addition",
        source: "E4.16",
        labels: labels(&["e", "a", "a2", "a3"]),
        structure: CatalogStructure::Algebra(
            TwoTwoOneAlgebra::new(base, add).expect("orders match"),
        ),
    }
}

fn d8_brace() -> CatalogEntry {
    // Dihedral composition in the order e, a, a2, a3, b, ba, ba2, ba3
    // with a^4 = b^2 = e and ab = ba^3.
    let mul = bin(
        8,
        &[
            [0, 1, 2, 3, 4, 5, 6, 7],
            [1, 2, 3, 0, 7, 4, 5, 6],
            [2, 3, 0, 1, 6, 7, 4, 5],
            [3, 0, 1, 2, 5, 6, 7, 4],
            [4, 5, 6, 7, 0, 1, 2, 3],
            [5, 6, 7, 4, 3, 0, 1, 2],
            [6, 7, 4, 5, 2, 3, 0, 1],
            [7, 4, 5, 6, 1, 2, 3, 0],
        ],
    );
    // Elementary abelian addition; every element is its own negative.
    let add = bin(
        8,
        &[
            [0, 1, 2, 3, 4, 5, 6, 7],
            [1, 0, 6, 7, 5, 4, 2, 3],
            [2, 6, 0, 4, 3, 7, 1, 5],
            [3, 7, 4, 0, 2, 6, 5, 1],
            [4, 5, 3, 2, 0, 1, 7, 6],
            [5, 4, 7, 6, 1, 0, 3, 2],
            [6, 2, 1, 5, 7, 3, 0, 4],
            [7, 3, 5, 1, 6, 2, 4, 0],
        ],
    );
    let star = un(&[0, 3, 2, 1, 4, 5, 6, 7]);
    let neg = un(&[0, 1, 2, 3, 4, 5, 6, 7]);
    CatalogEntry {
        name: "d8_brace",
        description: "two-sided skew brace: dihedral multiplication of order 8 \
                      with an elementary abelian addition",
        source: "E4.15",
        labels: labels(&["e", "a", "a2", "a3", "b", "ba", "ba2", "ba3"]),
        structure: CatalogStructure::Brace(
            validate_wsb(add, neg, mul, star).expect("catalog brace valid"),
        ),
    }
}

fn klein_rs() -> CatalogEntry {
    // Klein four-group multiplication with identity star; the addition
    // is the rectangular band (i,j) + (k,l) = (i,l) on the coordinates
    // e = (1,1), f = (2,2), g = (1,2), h = (2,1), with candidate
    // negation swapping coordinates. The projection link -x + x = xx*
    // fails at f, so this is deliberately not a weak ⋆-brace.
    let mul = bin(
        4,
        &[
            [0, 1, 2, 3, P, P, P, P],
            [1, 0, 3, 2, P, P, P, P],
            [2, 3, 0, 1, P, P, P, P],
            [3, 2, 1, 0, P, P, P, P],
        ],
    );
    let add = bin(
        4,
        &[
            [0, 2, 2, 0, P, P, P, P],
            [3, 1, 1, 3, P, P, P, P],
            [0, 2, 2, 0, P, P, P, P],
            [3, 1, 1, 3, P, P, P, P],
        ],
    );
    let base = star_semigroup(mul, un(&[0, 1, 2, 3]));
    CatalogEntry {
        name: "klein_rs",
        description: "Klein four-group with a rectangular-band addition and a \
                      candidate negation; fails weak ⋆-brace validation by design",
        source: "R5.16",
        labels: labels(&["e", "f", "g", "h"]),
        structure: CatalogStructure::AlgebraWithNeg {
            algebra: TwoTwoOneAlgebra::new(base, add).expect("orders match"),
            neg: un(&[0, 1, 3, 2]),
        },
    }
}

fn ls2() -> CatalogEntry {
    let mul = bin(2, &[[0, 0, P, P, P, P, P, P], [0, 1, P, P, P, P, P, P]]);
    let add = bin(2, &[[0, 0, P, P, P, P, P, P], [1, 1, P, P, P, P, P, P]]);
    let base = star_semigroup(mul, un(&[0, 1]));
    CatalogEntry {
        name: "ls2",
        description: "left semibrace on the two-element meet semilattice with \
                      left-projection addition; the 1+1 entry (= 1) is inferred \
                      from 1+0 = 1+1 together with the value λ1(0) = 1",
        source: "E4.14",
        labels: labels(&["0", "1"]),
        structure: CatalogStructure::Algebra(
            TwoTwoOneAlgebra::new(base, add).expect("orders match"),
        ),
    }
}

fn rect22() -> CatalogEntry {
    let mul = bin(
        4,
        &[
            [0, 1, 0, 1, P, P, P, P],
            [0, 1, 0, 1, P, P, P, P],
            [2, 3, 2, 3, P, P, P, P],
            [2, 3, 2, 3, P, P, P, P],
        ],
    );
    CatalogEntry {
        name: "rect22",
        description: "2x2 rectangular band (a,b)(c,d) = (a,d) with star the \
                      transpose (a,b) -> (b,a)",
        source: "R3.7",
        labels: labels(&["(1,1)", "(1,2)", "(2,1)", "(2,2)"]),
        structure: CatalogStructure::Star(star_semigroup(mul, un(&[0, 2, 1, 3]))),
    }
}

// Symmetric group on {1,2,3}; g.h composes with h applied first, in
// the order e, (12), (13), (23), (123), (132).
fn s3_tables() -> (BinOp, UnOp) {
    let mul = bin(
        6,
        &[
            [0, 1, 2, 3, 4, 5, P, P],
            [1, 0, 5, 4, 3, 2, P, P],
            [2, 4, 0, 5, 1, 3, P, P],
            [3, 5, 4, 0, 2, 1, P, P],
            [4, 2, 3, 1, 5, 0, P, P],
            [5, 3, 1, 2, 0, 4, P, P],
        ],
    );
    (mul, un(&[0, 1, 2, 3, 5, 4]))
}

fn s3_labels() -> Vec<String> {
    labels(&["e", "(12)", "(13)", "(23)", "(123)", "(132)"])
}

fn s3() -> CatalogEntry {
    let (mul, star) = s3_tables();
    CatalogEntry {
        name: "s3",
        description: "symmetric group on three letters with star the group inverse",
        source: "R4.9",
        labels: s3_labels(),
        structure: CatalogStructure::Star(star_semigroup(mul, star)),
    }
}

fn s3_skewbrace() -> CatalogEntry {
    let (mul, star) = s3_tables();
    let (add, neg) = s3_tables();
    CatalogEntry {
        name: "s3_skewbrace",
        description: "trivial skew brace on the symmetric group on three \
                      letters: addition equals multiplication",
        source: "E4.13",
        labels: s3_labels(),
        structure: CatalogStructure::Brace(
            validate_wsb(add, neg, mul, star).expect("catalog brace valid"),
        ),
    }
}

fn sl2() -> CatalogEntry {
    let mul = bin(2, &[[0, 0, P, P, P, P, P, P], [0, 1, P, P, P, P, P, P]]);
    CatalogEntry {
        name: "sl2",
        description: "two-element meet semilattice with identity star; baseline entry",
        source: "baseline",
        labels: labels(&["0", "1"]),
        structure: CatalogStructure::Star(star_semigroup(mul, un(&[0, 1]))),
    }
}

fn z8_brace() -> CatalogEntry {
    let mul = bin(
        8,
        &[
            [0, 1, 2, 3, 4, 5, 6, 7],
            [1, 0, 7, 6, 5, 4, 3, 2],
            [2, 7, 4, 1, 6, 3, 0, 5],
            [3, 6, 1, 4, 7, 2, 5, 0],
            [4, 5, 6, 7, 0, 1, 2, 3],
            [5, 4, 3, 2, 1, 0, 7, 6],
            [6, 3, 0, 5, 2, 7, 4, 1],
            [7, 2, 5, 0, 3, 6, 1, 4],
        ],
    );
    let add = BinOp::from_fn(8, |a, b| (a + b) % 8);
    let star = un(&[0, 1, 6, 7, 4, 5, 2, 3]);
    let neg = un(&[0, 7, 6, 5, 4, 3, 2, 1]);
    CatalogEntry {
        name: "z8_brace",
        description: "two-sided brace on eight elements: addition mod 8 with a \
                      second abelian group multiplication",
        source: "E4.17",
        labels: labels(&["0", "1", "2", "3", "4", "5", "6", "7"]),
        structure: CatalogStructure::Brace(
            validate_wsb(add, neg, mul, star).expect("catalog brace valid"),
        ),
    }
}

/// All entries, alphabetically by name.
pub fn entries() -> Vec<CatalogEntry> {
    vec![
        c3(),
        c4_semibrace(),
        d8_brace(),
        klein_rs(),
        ls2(),
        rect22(),
        s3(),
        s3_skewbrace(),
        sl2(),
        z8_brace(),
    ]
}

pub fn names() -> Vec<&'static str> {
    entries().iter().map(|e| e.name).collect()
}

pub fn get_entry(name: &str) -> Result<CatalogEntry, CatalogError> {
    entries()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| CatalogError::UnknownName {
            name: name.to_string(),
        })
}
