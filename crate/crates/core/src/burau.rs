//! The Burau representation, its reduced summand, and the permutation
//! representation it deforms.

use serde::{Deserialize, Serialize};

use crate::algebra::{LaurentMatrix, LaurentPoly, Matrix};
use crate::braid::{BraidWord, Permutation};

/// The image of a braid word under the (reduced or unreduced) Burau representation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BurauImage {
    pub matrix: LaurentMatrix,
    pub strands: usize,
    pub reduced: bool,
}

fn lp(low: i64, coeffs: &[i64]) -> LaurentPoly {
    LaurentPoly::from_coeffs(low, coeffs)
}

/// Right-multiplies `m` by a matrix that equals the identity outside the
/// square block starting at `lo`.
fn apply_block(m: &mut LaurentMatrix, lo: usize, block: &[Vec<LaurentPoly>]) {
    let k = block.len();
    for r in 0..m.rows() {
        let old: Vec<LaurentPoly> = (0..k).map(|c| m[(r, lo + c)].clone()).collect();
        for (j, _) in block.iter().enumerate() {
            let mut acc = LaurentPoly::zero();
            for (i, x) in old.iter().enumerate() {
                let g = &block[i][j];
                if !x.is_zero() && !g.is_zero() {
                    acc += &(x * g);
                }
            }
            m[(r, lo + j)] = acc;
        }
    }
}

/// Generator block of `β_{n,q}(σ_i^{±1})` and the row where it starts.
fn unreduced_block(letter: i64) -> (usize, Vec<Vec<LaurentPoly>>) {
    let i = letter.unsigned_abs() as usize;
    let block = if letter > 0 {
        vec![vec![lp(0, &[1, -1]), lp(0, &[1])], vec![lp(1, &[1]), LaurentPoly::zero()]]
    } else {
        vec![vec![LaurentPoly::zero(), lp(-1, &[1])], vec![lp(0, &[1]), lp(-1, &[-1, 1])]]
    };
    (i - 1, block)
}

fn reduced_block(n: usize, letter: i64) -> (usize, Vec<Vec<LaurentPoly>>) {
    let i = letter.unsigned_abs() as usize;
    let inv = letter < 0;
    let zero = LaurentPoly::zero;
    let one = LaurentPoly::one;
    // -q or -q^-1 on the diagonal
    let d = if inv { lp(-1, &[-1]) } else { lp(1, &[-1]) };
    // entries to the left and right of the diagonal in row i
    let left = if inv { one() } else { lp(1, &[1]) };
    let right = if inv { lp(-1, &[1]) } else { one() };
    if n == 2 {
        (0, vec![vec![d]])
    } else if i == 1 {
        (0, vec![vec![d, right], vec![zero(), one()]])
    } else if i == n - 1 {
        (i - 2, vec![vec![one(), zero()], vec![left, d]])
    } else {
        (
            i - 2,
            vec![
                vec![one(), zero(), zero()],
                vec![left, d, right],
                vec![zero(), zero(), one()],
            ],
        )
    }
}

/// `β_{n,q}(w)`, the product of generator images in word order.
pub fn burau_matrix(w: &BraidWord) -> BurauImage {
    let mut m = Matrix::identity(w.strands());
    for &l in w.letters() {
        let (lo, block) = unreduced_block(l);
        apply_block(&mut m, lo, &block);
    }
    BurauImage { matrix: m, strands: w.strands(), reduced: false }
}

/// `β^r_{n,q}(w)`, of dimension `n - 1`.
pub fn reduced_burau_matrix(w: &BraidWord) -> BurauImage {
    let n = w.strands();
    assert!(n >= 2, "the reduced representation needs at least two strands");
    let mut m = Matrix::identity(n - 1);
    for &l in w.letters() {
        let (lo, block) = reduced_block(n, l);
        apply_block(&mut m, lo, &block);
    }
    BurauImage { matrix: m, strands: n, reduced: true }
}

/// `sgn_q(w) = det β_{n,q}(w)`.
pub fn sgn_q(w: &BraidWord) -> LaurentPoly {
    burau_matrix(w)
        .matrix
        .det()
        .expect("Burau images are square matrices over an integral domain")
}

/// The permutation matrix with a 1 in row `p(j)`, column `j`.
pub fn permutation_rep_matrix(p: &Permutation) -> LaurentMatrix {
    Matrix::from_fn(p.len(), p.len(), |i, j| {
        if p.apply(j + 1) == i + 1 { LaurentPoly::one() } else { LaurentPoly::zero() }
    })
}

/// An `n × n` matrix `C` with `β_{n,q}(σ) C = C (1 ⊕ β^r_{n,q}(σ))` for every braid.
///
/// The first column `(1, q, …, q^{n-1})` spans the fixed line; column `j ≥ 1`
/// is `e_j - e_{j-1}`. `det C = [n]_q`, so `C` is invertible over `Q(q)` but not over `Λ`.
pub fn decomposition_conjugator(n: usize) -> LaurentMatrix {
    Matrix::from_fn(n, n, |i, j| {
        if j == 0 {
            LaurentPoly::q_pow(i as i64)
        } else if i == j {
            LaurentPoly::one()
        } else if i + 1 == j {
            -LaurentPoly::one()
        } else {
            LaurentPoly::zero()
        }
    })
}

/// Checks that `β_{n,q}(w)` splits as `1 ⊕ β^r_{n,q}(w)` under [`decomposition_conjugator`].
///
/// The comparison `β C = C (1 ⊕ β^r)` avoids inverting `C`.
pub fn decomposition_check(w: &BraidWord) -> bool {
    let c = decomposition_conjugator(w.strands());
    let full = burau_matrix(w).matrix;
    let reduced = reduced_burau_matrix(w).matrix;
    let split = Matrix::<LaurentPoly>::identity(1).direct_sum(&reduced);
    &full * &c == &c * &split
}

/// Squier's form `Ω^r_n` in the variable `t = q^{1/2}`.
pub fn squier_form(n: usize) -> LaurentMatrix {
    assert!(n >= 2);
    Matrix::from_fn(n - 1, n - 1, |i, j| {
        if i == j {
            lp(-1, &[1, 0, 1])
        } else if i + 1 == j {
            lp(-1, &[-1])
        } else if j + 1 == i {
            lp(1, &[-1])
        } else {
            LaurentPoly::zero()
        }
    })
}

/// Exact unitarity of the reduced Burau image for Squier's form:
/// `β^r(w)^* Ω^r_n β^r(w) = Ω^r_n` over `Z[t, t^-1]`, where `*` is the
/// bar involution composed with transposition.
pub fn squier_check(w: &BraidWord) -> bool {
    let b = reduced_burau_matrix(w).matrix.map(|x| x.substitute_power(2));
    let omega = squier_form(w.strands());
    &(&b.conjugate_transpose() * &omega) * &b == omega
}

impl BurauImage {
    /// Sets `q = 1` entrywise.
    pub fn at_q_one(&self) -> LaurentMatrix {
        self.matrix.map(|x| LaurentPoly::constant(x.eval_at_one()))
    }

    pub fn trace(&self) -> LaurentPoly {
        self.matrix.trace()
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }
}
