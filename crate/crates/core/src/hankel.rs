//! Hankel matrices, exact determinants, PSD decisions, and the determinant
//! transform that maps `a` to the sequence of k×k Hankel minors
//! `a'_n = det(a_{n+i+j})`.
//!
//! Positive semidefiniteness is decided exactly by recursive Schur-complement
//! elimination; a negative verdict always carries a rational witness vector
//! `v` with `v^T M v < 0`.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::sequence::MomentPrefix;

/// A symmetric matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymMatrix {
    rows: Vec<Vec<Rational>>,
}

impl SymMatrix {
    /// Build from rows, checking squareness and symmetry.
    #[allow(clippy::needless_range_loop)]
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let m = rows.len();
        if m == 0 {
            return Err(Error::InvalidInput("matrix must be nonempty".into()));
        }
        for row in &rows {
            if row.len() != m {
                return Err(Error::InvalidInput("matrix must be square".into()));
            }
        }
        for i in 0..m {
            for j in (i + 1)..m {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::InvalidInput(format!(
                        "matrix is not symmetric at ({i},{j})"
                    )));
                }
            }
        }
        Ok(Self { rows })
    }

    pub fn from_integers(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| crate::rational::int(n)).collect())
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }
}

/// `v^T M v`, evaluated exactly.
pub fn quadratic_form(m: &SymMatrix, v: &[Rational]) -> Rational {
    assert_eq!(v.len(), m.size(), "vector length must match matrix size");
    let mut acc = Rational::zero();
    for (i, vi) in v.iter().enumerate() {
        for (j, vj) in v.iter().enumerate() {
            acc += vi * vj * &m.rows[i][j];
        }
    }
    acc
}

/// The m×m leading principal truncation of the shifted Hankel matrix:
/// entry `(i, j)` is `a_{i+j+s}`.
pub fn hankel_matrix(a: &MomentPrefix, s: usize, m: usize) -> Result<SymMatrix> {
    assert!(m >= 1, "matrix size must be positive");
    let required = 2 * m - 1 + s;
    if a.len() < required {
        return Err(Error::InsufficientTerms {
            required,
            actual: a.len(),
        });
    }
    let rows = (0..m)
        .map(|i| (0..m).map(|j| a.term(i + j + s).clone()).collect())
        .collect();
    Ok(SymMatrix { rows })
}

/// Exact determinant by rational Gaussian elimination.
#[allow(clippy::needless_range_loop)]
pub fn det_exact(m: &SymMatrix) -> Rational {
    let n = m.size();
    let mut a = m.rows.clone();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let pivot = a[col][col].clone();
        det *= &pivot;
        for r in (col + 1)..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &pivot;
            for c in col..n {
                let delta = &factor * &a[col][c];
                a[r][c] -= delta;
            }
        }
    }
    det
}

/// Outcome of an exact positive-semidefiniteness decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PsdVerdict {
    Psd,
    /// Carries a rational vector `v` with `v^T M v < 0`.
    NotPsd {
        witness: Vec<Rational>,
    },
}

impl PsdVerdict {
    pub fn is_psd(&self) -> bool {
        matches!(self, PsdVerdict::Psd)
    }
}

/// Decide whether a symmetric rational matrix is positive semidefinite.
///
/// Recursive Schur-complement elimination: a negative diagonal entry refutes
/// directly; a zero diagonal entry with a nonzero row refutes via the 2×2
/// principal block; a zero diagonal entry with a zero row is dropped;
/// otherwise the Schur complement is formed exactly and the recursion
/// continues. Leading-principal-minor nonnegativity alone would not suffice.
pub fn psd_check(m: &SymMatrix) -> PsdVerdict {
    match negative_direction(m.rows.clone()) {
        None => PsdVerdict::Psd,
        Some(witness) => {
            debug_assert!(quadratic_form(m, &witness).is_negative());
            PsdVerdict::NotPsd { witness }
        }
    }
}

/// Returns `v` with `v^T M v < 0`, or `None` when `M` is PSD.
fn negative_direction(m: Vec<Vec<Rational>>) -> Option<Vec<Rational>> {
    let n = m.len();
    if n == 0 {
        return None;
    }
    let d = m[0][0].clone();
    if d.is_negative() {
        let mut v = vec![Rational::zero(); n];
        v[0] = Rational::one();
        return Some(v);
    }
    if d.is_zero() {
        if let Some(j) = (1..n).find(|&j| !m[0][j].is_zero()) {
            // On the block [[0, b], [b, c]] take v = (x, 1) with
            // 2xb + c = -1, so x = -(c + 1)/(2b).
            let b = &m[0][j];
            let c = &m[j][j];
            let x = -(c + Rational::one()) / (Rational::from_integer(2.into()) * b);
            let mut v = vec![Rational::zero(); n];
            v[0] = x;
            v[j] = Rational::one();
            return Some(v);
        }
        // Zero row: drop it and recurse.
        let sub: Vec<Vec<Rational>> = m[1..].iter().map(|row| row[1..].to_vec()).collect();
        return negative_direction(sub).map(|w| {
            let mut v = vec![Rational::zero()];
            v.extend(w);
            v
        });
    }
    // d > 0: Schur complement S = A - b b^T / d over the trailing block.
    let mut sub = Vec::with_capacity(n - 1);
    for i in 1..n {
        let mut row = Vec::with_capacity(n - 1);
        for j in 1..n {
            row.push(&m[i][j] - &m[i][0] * &m[0][j] / &d);
        }
        sub.push(row);
    }
    negative_direction(sub).map(|w| {
        // Lift: v = (-(b^T w)/d, w) gives v^T M v = w^T S w.
        let mut bw = Rational::zero();
        for (i, wi) in w.iter().enumerate() {
            bw += &m[i + 1][0] * wi;
        }
        let mut v = vec![-bw / &d];
        v.extend(w);
        v
    })
}

/// The Hankel determinant transform: `a'_n = det(a_{n+i+j})_{i,j=0}^{k-1}`.
///
/// The output prefix has `len(a) - 2(k - 1)` terms; `k = 1` is the identity.
pub fn hankel_transform(a: &MomentPrefix, k: usize) -> Result<MomentPrefix> {
    assert!(k >= 1, "k must be positive");
    let required = 2 * k - 1;
    if a.len() < required {
        return Err(Error::InsufficientTerms {
            required,
            actual: a.len(),
        });
    }
    let out_len = a.len() - 2 * (k - 1);
    let mut terms = Vec::with_capacity(out_len);
    for n in 0..out_len {
        let window = a.shift(n)?;
        terms.push(det_exact(&hankel_matrix(&window, 0, k)?));
    }
    MomentPrefix::new(terms)
}

/// Apply the k = 2 transform `t` times. Each round shortens the prefix by two
/// terms, so the result keeps `len(a) - 2t` terms.
pub fn iterate_l2(a: &MomentPrefix, t: usize) -> Result<MomentPrefix> {
    if a.len() < 2 * t + 1 {
        return Err(Error::InsufficientTerms {
            required: 2 * t + 1,
            actual: a.len(),
        });
    }
    let mut cur = a.clone();
    for _ in 0..t {
        cur = hankel_transform(&cur, 2)?;
    }
    Ok(cur)
}

/// How a prefix failed the Stieltjes-moment necessary conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SmRefutation {
    /// A Hankel truncation is not PSD; `value = witness^T H witness < 0`.
    NotPsd {
        shift: usize,
        matrix: SymMatrix,
        witness: Vec<Rational>,
        value: Rational,
    },
    /// `a_0 = 0` forces the whole sequence to vanish; `a_index` does not.
    NonzeroWithZeroLeading { index: usize },
}

/// Outcome of [`sm_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SmVerdict {
    /// Both Hankel truncations supported by the prefix are PSD.
    /// `unshifted`/`shifted` are the verified matrix sizes for shifts 0 and 1.
    ConsistentAtDepth {
        unshifted: usize,
        shifted: usize,
    },
    Refuted(SmRefutation),
}

impl SmVerdict {
    /// Overall verified depth: the smaller of the two truncation sizes.
    pub fn depth(&self) -> Option<usize> {
        match self {
            SmVerdict::ConsistentAtDepth { unshifted, shifted } => Some(*unshifted.min(shifted)),
            SmVerdict::Refuted(_) => None,
        }
    }
}

/// Check the Stieltjes-moment necessary conditions on a finite prefix.
///
/// Builds the largest leading principal truncations of the Hankel matrix and
/// its shift supported by the prefix and runs [`psd_check`] on both. This is
/// a necessary-condition check only: it refutes or reports the verified
/// truncation depth, never certifies the full moment property.
///
/// A prefix with `a_0 = 0` and any nonzero later term is refuted outright:
/// such a sequence cannot be a moment sequence even though every finite
/// truncation may be PSD.
pub fn sm_check(a: &MomentPrefix) -> SmVerdict {
    if a.term(0).is_zero() {
        if let Some(index) = a.terms().iter().position(|t| !t.is_zero()) {
            return SmVerdict::Refuted(SmRefutation::NonzeroWithZeroLeading { index });
        }
    }
    let len = a.len();
    let depth_unshifted = len.div_ceil(2);
    let depth_shifted = len / 2;
    for (shift, size) in [(0, depth_unshifted), (1, depth_shifted)] {
        if size == 0 {
            continue;
        }
        let h = hankel_matrix(a, shift, size).expect("size chosen to fit the prefix");
        if let PsdVerdict::NotPsd { witness } = psd_check(&h) {
            let value = quadratic_form(&h, &witness);
            return SmVerdict::Refuted(SmRefutation::NotPsd {
                shift,
                matrix: h,
                witness,
                value,
            });
        }
    }
    SmVerdict::ConsistentAtDepth {
        unshifted: depth_unshifted,
        shifted: depth_shifted,
    }
}
