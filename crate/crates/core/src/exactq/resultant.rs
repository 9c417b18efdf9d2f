//! Resultants and discriminants of multivariate polynomials with respect
//! to one variable.

use super::poly::{Poly, Var};
use super::uni::sylvester_rows;
use super::ExactError;

/// Sylvester-matrix resultant of `f` and `g` with respect to `v`, rows of
/// `f` first. The result is a polynomial in the remaining variables.
pub fn resultant_elim(f: &Poly, g: &Poly, v: Var) -> Result<Poly, ExactError> {
    for h in [f, g] {
        if h.degree_in(v) == 0 {
            return Err(ExactError::DegreeTooLow { var: v, needed: 1 });
        }
    }
    Ok(sylvester_resultant(f, g, v))
}

/// Resultant without the positive-degree precondition on `g`; a constant
/// `g` = c gives c^deg(f).
fn sylvester_resultant(f: &Poly, g: &Poly, v: Var) -> Poly {
    let fc = f.coefficients_in(v);
    let gc = g.coefficients_in(v);
    if fc.is_empty() || gc.is_empty() {
        return Poly::zero();
    }
    let (m, n) = (fc.len() - 1, gc.len() - 1);
    let mut mat = sylvester_rows(&fc, &gc, m, n, Poly::zero);
    det_bareiss(&mut mat)
}

/// Discriminant in `v`: (-1)^{d(d-1)/2} Res_v(f, df/dv) / lead_v(f).
pub fn discriminant_in(f: &Poly, v: Var) -> Result<Poly, ExactError> {
    let d = f.degree_in(v);
    if d == 0 {
        return Err(ExactError::DegreeTooLow { var: v, needed: 1 });
    }
    let res = sylvester_resultant(f, &f.derivative(v), v);
    let lead = f.leading_coeff_in(v);
    let disc = res
        .div_exact(&lead)
        .expect("leading coefficient divides Res(f, f')");
    let sign_flip = (d as u64 * (d as u64 - 1) / 2) % 2 == 1;
    Ok(if sign_flip { -disc } else { disc })
}

/// Fraction-free Gaussian elimination over the polynomial ring.
fn det_bareiss(mat: &mut [Vec<Poly>]) -> Poly {
    let n = mat.len();
    if n == 0 {
        return Poly::one();
    }
    let mut negate = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if mat[k][k].is_zero() {
            match (k + 1..n).find(|&r| !mat[r][k].is_zero()) {
                Some(r) => {
                    mat.swap(k, r);
                    negate = !negate;
                }
                None => return Poly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&mat[i][j] * &mat[k][k]) - &(&mat[i][k] * &mat[k][j]);
                mat[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss step divides exactly");
            }
            mat[i][k] = Poly::zero();
        }
        prev = mat[k][k].clone();
    }
    let det = mat[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}
