//! Discontinuous Lagrange reference bases of degree k on the triangle.
//!
//! The basis is nodal on the principal lattice (vertices first), so the
//! coefficients of a polynomial are its values at the lattice points. Every
//! degree of freedom is internal to the cell; there is no inter-element
//! coupling.

use crate::elements::poly::{monomial_exponents, space_dim, Poly2};
use crate::elements::ElementError;

pub const MAX_DG_ORDER: usize = 3;

/// Reference basis for DG(k): `basis[i]` is 1 at `nodes[i]`, 0 at the others.
#[derive(Clone, Debug)]
pub struct DgReference {
    pub k: usize,
    pub nodes: Vec<[f64; 2]>,
    pub basis: Vec<Poly2>,
}

impl DgReference {
    pub fn new(k: usize) -> Result<DgReference, ElementError> {
        if k > MAX_DG_ORDER {
            return Err(ElementError::UnsupportedDgOrder(k));
        }
        if k == 0 {
            return Ok(DgReference {
                k,
                nodes: vec![[1.0 / 3.0, 1.0 / 3.0]],
                basis: vec![Poly2::monomial(0, 0, 0)],
            });
        }
        let mut nodes = Vec::with_capacity(space_dim(k));
        for j in 0..=k {
            for i in 0..=(k - j) {
                nodes.push([i as f64 / k as f64, j as f64 / k as f64]);
            }
        }
        // invert the Vandermonde to get the nodal basis in monomial form
        let n = nodes.len();
        let exps = monomial_exponents(k);
        let mut vand = faer::Mat::<f64>::zeros(n, n);
        for (r, node) in nodes.iter().enumerate() {
            for (c, &(a, b)) in exps.iter().enumerate() {
                vand[(r, c)] = node[0].powi(a as i32) * node[1].powi(b as i32);
            }
        }
        let inv = vand.partial_piv_lu().inverse();
        let basis = (0..n)
            .map(|j| {
                let mut p = Poly2::zero(k);
                for c in 0..n {
                    p.coeffs[c] = inv[(c, j)];
                }
                p
            })
            .collect();
        Ok(DgReference { k, nodes, basis })
    }

    pub fn ndof(&self) -> usize {
        self.basis.len()
    }

    /// Values of every basis function at the given reference points.
    /// Output layout: `values[i][q]` for basis i, point q.
    pub fn eval(&self, points: &[[f64; 2]]) -> Vec<Vec<f64>> {
        self.basis
            .iter()
            .map(|p| points.iter().map(|&[x, y]| p.eval(x, y)).collect())
            .collect()
    }
}

/// Values of the DG(k) basis at reference points; see `DgReference::eval`.
pub fn eval_dg_basis(k: usize, points: &[[f64; 2]]) -> Result<Vec<Vec<f64>>, ElementError> {
    Ok(DgReference::new(k)?.eval(points))
}
