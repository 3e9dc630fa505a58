//! Graded dimensions of web algebras: Cartan matrices, the Gorenstein
//! parameter and the Frobenius duality check on total dimensions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bases::{BasisKind, Block};
use crate::combinatorics::{GlWeight, Shape, Tableau};
use crate::error::{Error, Result};
use crate::ring::LaurentPoly;
use crate::webs::d_norm;

/// Square matrix of Laurent polynomials indexed by tableaux.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GradedMatrix {
    labels: Vec<Tableau>,
    entries: Vec<Vec<LaurentPoly>>,
}

impl GradedMatrix {
    pub fn new(labels: Vec<Tableau>, entries: Vec<Vec<LaurentPoly>>) -> Self {
        assert_eq!(entries.len(), labels.len(), "one row per label");
        assert!(entries.iter().all(|r| r.len() == labels.len()), "matrix must be square");
        GradedMatrix { labels, entries }
    }

    pub fn labels(&self) -> &[Tableau] {
        &self.labels
    }

    pub fn entries(&self) -> &[Vec<LaurentPoly>] {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i][j]
    }

    /// Sum of all entries.
    pub fn total(&self) -> LaurentPoly {
        self.entries.iter().flatten().cloned().sum()
    }

    /// `C_{ST} = C_{TS}`.
    pub fn is_symmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// `bar(C_{ST}) = C_{TS}`.
    pub fn is_bar_symmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j].bar() == self.entries[j][i]))
    }

    /// `bar(C_{ST}) = v^{-shift} C_{ST}` for every entry.
    pub fn is_bar_invariant_up_to(&self, shift: i32) -> bool {
        self.entries.iter().flatten().all(|c| c.bar() == c.shift(-shift))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().flatten().all(|c| c.is_nonnegative())
    }
}

impl fmt::Display for GradedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self.entries.iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect();
        let labels: Vec<String> = self.labels.iter().map(|t| t.to_string()).collect();
        let lw = labels.iter().map(|s| s.chars().count()).max().unwrap_or(0);
        let widths: Vec<usize> = (0..self.size())
            .map(|j| cells.iter().map(|r| r[j].chars().count()).chain([labels[j].chars().count()]).max().unwrap_or(0))
            .collect();
        write!(f, "{:lw$}", "")?;
        for (j, l) in labels.iter().enumerate() {
            write!(f, "  {:>w$}", l, w = widths[j])?;
        }
        writeln!(f)?;
        for (i, row) in cells.iter().enumerate() {
            write!(f, "{:lw$}", labels[i])?;
            for (j, c) in row.iter().enumerate() {
                write!(f, "  {:>w$}", c, w = widths[j])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Entry `(S, T)` is the graded dimension of `{}_S H(k)_T`, i.e. `⟨A^S, A^T⟩`.
pub fn cartan_matrix(shape: Shape, k: &GlWeight) -> Result<GradedMatrix> {
    Block::new(shape, k)?.gram(BasisKind::Lt)
}

pub fn gorenstein_parameter(n: usize, k: &GlWeight) -> Result<i64> {
    Ok(2 * d_norm(n, &k.0)?)
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct FrobeniusReport {
    pub weight: GlWeight,
    /// Total graded dimension `D(v) = Σ_{S,T} C_{ST}`.
    pub total: LaurentPoly,
    pub d: i64,
    /// `D(v^{-1}) = v^{-2d} D(v)`.
    pub passed: bool,
}

pub fn frobenius_check(shape: Shape, k: &GlWeight) -> Result<FrobeniusReport> {
    frobenius_from_cartan(shape.n(), k, &cartan_matrix(shape, k)?)
}

pub fn frobenius_from_cartan(n: usize, k: &GlWeight, c: &GradedMatrix) -> Result<FrobeniusReport> {
    let d = d_norm(n, &k.0)?;
    let shift = i32::try_from(2 * d).map_err(|_| Error::InvalidInput("normalization exponent too large".into()))?;
    let total = c.total();
    let passed = total.bar() == total.shift(-shift);
    Ok(FrobeniusReport { weight: k.clone(), total, d, passed })
}
