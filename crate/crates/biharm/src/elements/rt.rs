//! Raviart-Thomas reference bases RT_k1 on the triangle, k1 >= 1.
//!
//! RT_k1 = [P_{k1-1}]^2 + x * (homogeneous degree k1-1), of dimension
//! k1 (k1 + 2). The degrees of freedom are
//!   - per edge: moments of the outward normal component against Legendre
//!     polynomials P_0 .. P_{k1-1} in the normalized edge parameter,
//!   - interior: moments of each component against monomials of total
//!     degree <= k1 - 2.
//!
//! Local edge i runs from vertex (i+1)%3 to vertex (i+2)%3, which matches
//! the counter-clockwise traversal of the reference triangle, so the edge
//! normals used by the functionals are outward.

use crate::elements::poly::{legendre, monomial_exponents, space_dim, Poly2};
use crate::elements::quadrature::{quad_rule, EdgeRule};
use crate::elements::ElementError;

pub const MAX_RT_ORDER: usize = 4;

pub const REF_VERTS: [[f64; 2]; 3] = [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]];

/// Endpoints (start, end) of local edge i on the reference triangle.
pub fn ref_edge(i: usize) -> ([f64; 2], [f64; 2]) {
    (REF_VERTS[(i + 1) % 3], REF_VERTS[(i + 2) % 3])
}

/// Outward unit normal of local edge i and the edge length.
pub fn ref_edge_normal(i: usize) -> ([f64; 2], f64) {
    let (a, b) = ref_edge(i);
    let t = [b[0] - a[0], b[1] - a[1]];
    let len = (t[0] * t[0] + t[1] * t[1]).sqrt();
    // 90-degree clockwise rotation of the tangent is outward for CCW cells
    ([t[1] / len, -t[0] / len], len)
}

/// One vector-valued basis function with its divergence, in monomial form.
#[derive(Clone, Debug)]
pub struct RtBasisFn {
    pub vx: Poly2,
    pub vy: Poly2,
    pub div: Poly2,
}

impl RtBasisFn {
    pub fn eval(&self, p: [f64; 2]) -> [f64; 2] {
        [self.vx.eval(p[0], p[1]), self.vy.eval(p[0], p[1])]
    }

    pub fn eval_div(&self, p: [f64; 2]) -> f64 {
        self.div.eval(p[0], p[1])
    }
}

/// Reference RT_k1 element with basis dual to the moment functionals.
#[derive(Clone, Debug)]
pub struct RtReference {
    pub k1: usize,
    pub basis: Vec<RtBasisFn>,
}

impl RtReference {
    pub fn new(k1: usize) -> Result<RtReference, ElementError> {
        if k1 < 1 || k1 > MAX_RT_ORDER {
            return Err(ElementError::UnsupportedRtOrder(k1));
        }
        let gens = generators(k1);
        let ndof = gens.len();
        debug_assert_eq!(ndof, k1 * (k1 + 2));

        // duality matrix: functionals applied to generators
        let mut m = faer::Mat::<f64>::zeros(ndof, ndof);
        for (g, gen) in gens.iter().enumerate() {
            let dofs = apply_functionals(k1, |p| gen.eval(p));
            for (i, v) in dofs.iter().enumerate() {
                m[(i, g)] = *v;
            }
        }
        let minv = m.partial_piv_lu().inverse();
        let basis = (0..ndof)
            .map(|j| {
                let mut vx = Poly2::zero(k1);
                let mut vy = Poly2::zero(k1);
                let mut div = Poly2::zero(k1 - 1);
                for (g, gen) in gens.iter().enumerate() {
                    let c = minv[(g, j)];
                    vx.add_scaled(&gen.vx, c);
                    vy.add_scaled(&gen.vy, c);
                    div.add_scaled(&gen.div, c);
                }
                RtBasisFn { vx, vy, div }
            })
            .collect();
        Ok(RtReference { k1, basis })
    }

    pub fn ndof(&self) -> usize {
        self.basis.len()
    }

    /// Edge moments per edge.
    pub fn edge_moments(&self) -> usize {
        self.k1
    }

    /// Interior degrees of freedom.
    pub fn interior_dofs(&self) -> usize {
        self.k1 * (self.k1 - 1)
    }

    /// Local index of moment j on local edge e.
    pub fn edge_dof(&self, e: usize, j: usize) -> usize {
        e * self.k1 + j
    }

    pub fn interior_dof(&self, m: usize) -> usize {
        3 * self.k1 + m
    }

    /// Values and divergences at reference points:
    /// `(values[i][q], divs[i][q])`.
    #[allow(clippy::type_complexity)]
    pub fn eval(&self, points: &[[f64; 2]]) -> (Vec<Vec<[f64; 2]>>, Vec<Vec<f64>>) {
        let values = self
            .basis
            .iter()
            .map(|b| points.iter().map(|&p| b.eval(p)).collect())
            .collect();
        let divs = self
            .basis
            .iter()
            .map(|b| points.iter().map(|&p| b.eval_div(p)).collect())
            .collect();
        (values, divs)
    }
}

/// Spanning set of RT_k1 with analytic divergences.
fn generators(k1: usize) -> Vec<RtBasisFn> {
    let mut gens = Vec::new();
    for &(a, b) in &monomial_exponents(k1 - 1) {
        let m = Poly2::monomial(k1 - 1, a, b).with_degree(k1);
        let zero = Poly2::zero(k1);
        gens.push(RtBasisFn {
            div: m.ddx().with_degree(k1 - 1),
            vx: m.clone(),
            vy: zero.clone(),
        });
        gens.push(RtBasisFn {
            div: m.ddy().with_degree(k1 - 1),
            vx: zero,
            vy: m,
        });
    }
    // x * (homogeneous of degree k1-1); div(x m) = (k1+1) m for homogeneous m
    for c in 0..k1 {
        let e = k1 - 1 - c;
        gens.push(RtBasisFn {
            vx: Poly2::monomial(k1, c + 1, e),
            vy: Poly2::monomial(k1, c, e + 1),
            div: {
                let mut d = Poly2::monomial(k1 - 1, c, e);
                for v in d.coeffs.iter_mut() {
                    *v *= (k1 + 1) as f64;
                }
                d
            },
        });
    }
    gens
}

/// Apply all RT_k1 moment functionals to an arbitrary reference field.
///
/// Ordering: edge 0 moments 0..k1, edge 1, edge 2, then interior moments
/// (for each monomial of degree <= k1-2: x-component, then y-component).
pub fn apply_functionals(k1: usize, field: impl Fn([f64; 2]) -> [f64; 2]) -> Vec<f64> {
    let mut out = Vec::with_capacity(k1 * (k1 + 2));
    let erule = EdgeRule::new(2 * k1 + 3);
    for e in 0..3 {
        let (a, b) = ref_edge(e);
        let (n, len) = ref_edge_normal(e);
        for j in 0..k1 {
            let mut acc = 0.0;
            for (q, &t) in erule.points.iter().enumerate() {
                let s = 0.5 * (t + 1.0);
                let p = [a[0] + s * (b[0] - a[0]), a[1] + s * (b[1] - a[1])];
                let f = field(p);
                acc += erule.weights[q] * (f[0] * n[0] + f[1] * n[1]) * legendre(j, t);
            }
            out.push(acc * 0.5 * len);
        }
    }
    if k1 >= 2 {
        let rule = quad_rule(2 * k1).unwrap();
        for &(a, b) in &monomial_exponents(k1 - 2) {
            for comp in 0..2 {
                let mut acc = 0.0;
                for q in 0..rule.len() {
                    let p = rule.xy(q);
                    let f = field(p);
                    acc += rule.weights[q] * f[comp] * p[0].powi(a as i32) * p[1].powi(b as i32);
                }
                out.push(acc);
            }
        }
    }
    out
}

/// Values and divergences of the RT_k1 basis at reference points.
#[allow(clippy::type_complexity)]
pub fn eval_rt_basis(
    k1: usize,
    points: &[[f64; 2]],
) -> Result<(Vec<Vec<[f64; 2]>>, Vec<Vec<f64>>), ElementError> {
    Ok(RtReference::new(k1)?.eval(points))
}

/// Number of interior monomial moments (dimension of [P_{k1-2}]^2).
pub fn interior_moment_count(k1: usize) -> usize {
    if k1 >= 2 {
        2 * space_dim(k1 - 2)
    } else {
        0
    }
}
