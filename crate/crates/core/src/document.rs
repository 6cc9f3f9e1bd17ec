//! JSON document format for finite (2,2,1)-algebras and weak ⋆-braces.
//!
//! A document carries a multiplication table and a star, and optionally
//! an addition and a negation. Tables are nested row-major arrays of
//! 0-based element indices; the optional `elements` field attaches
//! display labels. Structural validation (shapes, ranges, labels) is
//! separate from algebraic validation, so a well-formed document whose
//! tables violate an axiom is not a parse error.

use crate::semibrace::TwoTwoOneAlgebra;
use crate::star::{StarError, StarSemigroup};
use crate::table::{BinOp, UnOp};
use crate::wsb::{validate_wsb, WeakStarBrace, WsbError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("order must be at least 1")]
    ZeroOrder,
    #[error("{field} must have {expected} rows, got {got}")]
    WrongRowCount {
        field: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("{field} row {row} must have {expected} entries, got {got}")]
    WrongRowLength {
        field: &'static str,
        row: usize,
        expected: usize,
        got: usize,
    },
    #[error("{field}[{row}][{col}] is {value}, which is not below the order {order}")]
    CellOutOfRange {
        field: &'static str,
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("{field}[{pos}] is {value}, which is not below the order {order}")]
    EntryOutOfRange {
        field: &'static str,
        pos: usize,
        value: usize,
        order: usize,
    },
    #[error("elements must list {expected} labels, got {got}")]
    WrongLabelCount { expected: usize, got: usize },
    #[error("duplicate element label {label:?}")]
    DuplicateLabel { label: String },
    #[error("neg is present but add is missing")]
    NegWithoutAdd,
    #[error("this operation requires an add table")]
    MissingAdd,
    #[error("this operation requires add and neg tables")]
    MissingNeg,
}

/// Errors from turning a document into a validated structure: either
/// the document itself is malformed, or its tables violate an axiom.
#[derive(Debug, Error)]
pub enum LoadError {
    #[error(transparent)]
    Document(#[from] DocumentError),
    #[error("{0}")]
    Star(#[from] StarError),
    #[error("{0}")]
    Wsb(#[from] WsbError),
}

/// A finite algebra as serialized. `mul` and `star` are required; `add`
/// and `neg` extend the structure to a (2,2,1)-algebra or a weak
/// ⋆-brace candidate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub name: String,
    pub order: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<String>>,
    pub mul: Vec<Vec<usize>>,
    pub star: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub add: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub neg: Option<Vec<usize>>,
}

fn check_square(
    field: &'static str,
    rows: &[Vec<usize>],
    order: usize,
) -> Result<(), DocumentError> {
    if rows.len() != order {
        return Err(DocumentError::WrongRowCount {
            field,
            expected: order,
            got: rows.len(),
        });
    }
    for (r, row) in rows.iter().enumerate() {
        if row.len() != order {
            return Err(DocumentError::WrongRowLength {
                field,
                row: r,
                expected: order,
                got: row.len(),
            });
        }
        for (c, &value) in row.iter().enumerate() {
            if value >= order {
                return Err(DocumentError::CellOutOfRange {
                    field,
                    row: r,
                    col: c,
                    value,
                    order,
                });
            }
        }
    }
    Ok(())
}

fn check_flat(field: &'static str, entries: &[usize], order: usize) -> Result<(), DocumentError> {
    if entries.len() != order {
        return Err(DocumentError::WrongRowCount {
            field,
            expected: order,
            got: entries.len(),
        });
    }
    for (pos, &value) in entries.iter().enumerate() {
        if value >= order {
            return Err(DocumentError::EntryOutOfRange {
                field,
                pos,
                value,
                order,
            });
        }
    }
    Ok(())
}

fn flatten(rows: &[Vec<usize>]) -> Vec<usize> {
    rows.iter().flatten().copied().collect()
}

fn unflatten(order: usize, table: &BinOp) -> Vec<Vec<usize>> {
    (0..order).map(|a| table.row(a).to_vec()).collect()
}

impl AlgebraDocument {
    /// Parses and structurally validates a JSON document.
    pub fn parse(json: &str) -> Result<Self, DocumentError> {
        let doc: AlgebraDocument = serde_json::from_str(json)?;
        doc.validate()?;
        Ok(doc)
    }

    /// Shape, range and label checks. Algebraic axioms are not checked
    /// here.
    pub fn validate(&self) -> Result<(), DocumentError> {
        if self.order == 0 {
            return Err(DocumentError::ZeroOrder);
        }
        check_square("mul", &self.mul, self.order)?;
        check_flat("star", &self.star, self.order)?;
        if let Some(add) = &self.add {
            check_square("add", add, self.order)?;
        }
        if let Some(neg) = &self.neg {
            if self.add.is_none() {
                return Err(DocumentError::NegWithoutAdd);
            }
            check_flat("neg", neg, self.order)?;
        }
        if let Some(labels) = &self.elements {
            if labels.len() != self.order {
                return Err(DocumentError::WrongLabelCount {
                    expected: self.order,
                    got: labels.len(),
                });
            }
            let mut seen = std::collections::BTreeSet::new();
            for label in labels {
                if !seen.insert(label) {
                    return Err(DocumentError::DuplicateLabel {
                        label: label.clone(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn label(&self, index: usize) -> String {
        match &self.elements {
            Some(labels) if index < labels.len() => labels[index].clone(),
            _ => index.to_string(),
        }
    }

    pub fn mul_table(&self) -> Result<BinOp, DocumentError> {
        check_square("mul", &self.mul, self.order)?;
        Ok(BinOp::new(self.order, flatten(&self.mul)).expect("checked above"))
    }

    pub fn star_table(&self) -> Result<UnOp, DocumentError> {
        check_flat("star", &self.star, self.order)?;
        Ok(UnOp::new(self.order, self.star.clone()).expect("checked above"))
    }

    pub fn add_table(&self) -> Result<Option<BinOp>, DocumentError> {
        match &self.add {
            None => Ok(None),
            Some(rows) => {
                check_square("add", rows, self.order)?;
                Ok(Some(BinOp::new(self.order, flatten(rows)).expect("checked above")))
            }
        }
    }

    pub fn neg_table(&self) -> Result<Option<UnOp>, DocumentError> {
        match &self.neg {
            None => Ok(None),
            Some(entries) => {
                check_flat("neg", entries, self.order)?;
                Ok(Some(UnOp::new(self.order, entries.clone()).expect("checked above")))
            }
        }
    }

    /// Validates the multiplicative pair as a regular ⋆-semigroup.
    pub fn to_star_semigroup(&self) -> Result<StarSemigroup, LoadError> {
        self.validate()?;
        Ok(StarSemigroup::new(self.mul_table()?, self.star_table()?)?)
    }

    /// Validated multiplicative reduct plus the raw addition.
    pub fn to_algebra(&self) -> Result<TwoTwoOneAlgebra, LoadError> {
        let base = self.to_star_semigroup()?;
        let add = self.add_table()?.ok_or(DocumentError::MissingAdd)?;
        Ok(TwoTwoOneAlgebra::new(base, add).expect("orders validated"))
    }

    /// Full validation as a weak left ⋆-brace; requires add and neg.
    pub fn to_weak_star_brace(&self) -> Result<WeakStarBrace, LoadError> {
        self.validate()?;
        let add = self.add_table()?.ok_or(DocumentError::MissingAdd)?;
        let neg = self.neg_table()?.ok_or(DocumentError::MissingNeg)?;
        Ok(validate_wsb(add, neg, self.mul_table()?, self.star_table()?)?)
    }

    pub fn from_star_semigroup(name: &str, s: &StarSemigroup) -> Self {
        AlgebraDocument {
            name: name.to_string(),
            order: s.order(),
            elements: None,
            mul: unflatten(s.order(), s.mul_table()),
            star: s.star_table().entries().to_vec(),
            add: None,
            neg: None,
        }
    }

    pub fn from_algebra(name: &str, alg: &TwoTwoOneAlgebra) -> Self {
        let mut doc = Self::from_star_semigroup(name, alg.base());
        doc.add = Some(unflatten(alg.order(), alg.add_table()));
        doc
    }

    pub fn from_weak_star_brace(name: &str, w: &WeakStarBrace) -> Self {
        let mut doc = Self::from_star_semigroup(name, w.multiplicative());
        doc.add = Some(unflatten(w.order(), w.additive().mul_table()));
        doc.neg = Some(w.additive().star_table().entries().to_vec());
        doc
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        self.elements = Some(labels);
        self
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn emit_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("documents serialize");
        out.push('\n');
        out
    }

    /// Human-readable labeled operation tables.
    pub fn emit_text(&self) -> String {
        let labels: Vec<String> = (0..self.order).map(|i| self.label(i)).collect();
        let width = labels.iter().map(|l| l.len()).max().unwrap_or(1);
        let pad = |s: &str| format!("{:>width$}", s, width = width);

        let mut out = format!("{}  (order {})\n", self.name, self.order);
        let mut table = |title: &str, rows: &[Vec<usize>]| {
            out.push_str(&format!("\n{}:\n", title));
            let header: Vec<String> = labels.iter().map(|l| pad(l)).collect();
            out.push_str(&format!("{} | {}\n", pad(""), header.join(" ")));
            out.push_str(&format!(
                "{}-+-{}\n",
                "-".repeat(width),
                "-".repeat((width + 1) * self.order - 1)
            ));
            for (i, row) in rows.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(|&v| pad(&labels[v])).collect();
                out.push_str(&format!("{} | {}\n", pad(&labels[i]), cells.join(" ")));
            }
        };
        table("mul", &self.mul);
        if let Some(add) = &self.add {
            table("add", add);
        }
        let mut unary = |title: &str, entries: &[usize]| {
            out.push_str(&format!("\n{}:\n", title));
            for (i, &v) in entries.iter().enumerate() {
                out.push_str(&format!("{} -> {}\n", pad(&labels[i]), labels[v]));
            }
        };
        unary("star", &self.star);
        if let Some(neg) = &self.neg {
            unary("neg", neg);
        }
        out
    }
}
