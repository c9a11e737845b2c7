//! Quadrature rules on the reference triangle and on edges.
//!
//! Triangle rules are positive and symmetric under cyclic relabeling of the
//! vertices. Low degrees use the classical centroid and edge-midpoint rules;
//! higher degrees are built from a Gauss-Legendre tensor rule under the
//! Duffy (collapsed-coordinate) map and then cyclically symmetrized, which
//! keeps every weight positive at any degree.

use crate::elements::ElementError;

/// Quadrature rule on the reference triangle (vertices (0,0), (1,0), (0,1)).
///
/// Points are stored in barycentric coordinates; weights sum to the
/// reference area 1/2.
#[derive(Clone, Debug)]
pub struct QuadRule {
    pub points: Vec<[f64; 3]>,
    pub weights: Vec<f64>,
    pub exact_degree: usize,
}

impl QuadRule {
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Cartesian coordinates (x, y) of point `q` on the reference triangle.
    pub fn xy(&self, q: usize) -> [f64; 2] {
        let l = self.points[q];
        [l[1], l[2]]
    }
}

/// Maximum degree served by `quad_rule`.
pub const MAX_QUAD_DEGREE: usize = 20;

/// Symmetric positive rule exact for polynomials of total degree <= `degree`.
pub fn quad_rule(degree: usize) -> Result<QuadRule, ElementError> {
    if degree > MAX_QUAD_DEGREE {
        return Err(ElementError::UnsupportedQuadDegree(degree));
    }
    let rule = match degree {
        0 | 1 => QuadRule {
            points: vec![[1.0 / 3.0; 3]],
            weights: vec![0.5],
            exact_degree: 1,
        },
        2 => {
            // edge-midpoint rule
            let m = 0.5;
            QuadRule {
                points: vec![[m, m, 0.0], [0.0, m, m], [m, 0.0, m]],
                weights: vec![1.0 / 6.0; 3],
                exact_degree: 2,
            }
        }
        d => duffy_symmetric(d),
    };
    Ok(rule)
}

/// Duffy-map tensor rule, cyclically symmetrized.
fn duffy_symmetric(degree: usize) -> QuadRule {
    // Under (u, v) -> (u(1-v), v) a degree-d polynomial picks up one extra
    // power of v from the Jacobian (1-v).
    let m = degree / 2 + 1;
    let (gl_pts, gl_wts) = gauss_legendre(m);
    let mut points = Vec::with_capacity(3 * m * m);
    let mut weights = Vec::with_capacity(3 * m * m);
    for (iu, &tu) in gl_pts.iter().enumerate() {
        let u = 0.5 * (tu + 1.0);
        for (iv, &tv) in gl_pts.iter().enumerate() {
            let v = 0.5 * (tv + 1.0);
            let x = u * (1.0 - v);
            let y = v;
            let w = gl_wts[iu] * gl_wts[iv] * 0.25 * (1.0 - v);
            let bary = [1.0 - x - y, x, y];
            // cyclic images share the weight equally
            for r in 0..3 {
                points.push([bary[r % 3], bary[(r + 1) % 3], bary[(r + 2) % 3]]);
                weights.push(w / 3.0);
            }
        }
    }
    QuadRule {
        points,
        weights,
        exact_degree: degree,
    }
}

/// Gauss-Legendre nodes and weights on [-1, 1], exact to degree 2n-1.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut pts = vec![0.0; n];
    let mut wts = vec![0.0; n];
    for i in 0..(n + 1) / 2 {
        // Newton iteration from the Chebyshev-like initial guess
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        loop {
            let (p, dp) = legendre_with_derivative(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_with_derivative(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        pts[i] = -x;
        wts[i] = w;
        pts[n - 1 - i] = x;
        wts[n - 1 - i] = w;
    }
    (pts, wts)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut pm, mut p) = (1.0, x);
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 1..n {
        let next = ((2 * k + 1) as f64 * x * p - k as f64 * pm) / (k + 1) as f64;
        pm = p;
        p = next;
    }
    let dp = n as f64 * (x * p - pm) / (x * x - 1.0);
    (p, dp)
}

/// Gauss-Legendre rule on [-1, 1] packaged for edge integration.
#[derive(Clone, Debug)]
pub struct EdgeRule {
    pub points: Vec<f64>,
    pub weights: Vec<f64>,
}

impl EdgeRule {
    /// Rule exact for 1D polynomials of degree <= `degree`.
    pub fn new(degree: usize) -> EdgeRule {
        let n = degree / 2 + 1;
        let (points, weights) = gauss_legendre(n);
        EdgeRule { points, weights }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elements::poly::monomial_integral;

    #[test]
    fn degree_one_is_centroid_rule() {
        let r = quad_rule(1).unwrap();
        assert_eq!(r.len(), 1);
        assert!((r.weights[0] - 0.5).abs() < 1e-15);
        assert!((r.points[0][0] - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn weights_positive_and_sum_to_half() {
        for d in 0..=MAX_QUAD_DEGREE {
            let r = quad_rule(d).unwrap();
            assert!(r.weights.iter().all(|&w| w > 0.0), "degree {d}");
            let s: f64 = r.weights.iter().sum();
            assert!((s - 0.5).abs() < 1e-13, "degree {d}: sum {s}");
        }
    }

    #[test]
    fn exactness_against_monomial_formula() {
        for d in 0..=MAX_QUAD_DEGREE {
            let r = quad_rule(d).unwrap();
            for a in 0..=d {
                for b in 0..=(d - a) {
                    let mut acc = 0.0;
                    for (q, w) in r.weights.iter().enumerate() {
                        let [x, y] = r.xy(q);
                        acc += w * x.powi(a as i32) * y.powi(b as i32);
                    }
                    let exact = monomial_integral(a, b);
                    assert!(
                        (acc - exact).abs() < 1e-13,
                        "degree {d} monomial x^{a} y^{b}: {acc} vs {exact}"
                    );
                }
            }
        }
    }

    #[test]
    fn rejects_excessive_degree() {
        assert!(quad_rule(MAX_QUAD_DEGREE + 1).is_err());
    }

    #[test]
    fn gauss_legendre_exactness() {
        for n in 1..=12 {
            let (p, w) = gauss_legendre(n);
            for deg in 0..=(2 * n - 1) {
                let acc: f64 = p
                    .iter()
                    .zip(&w)
                    .map(|(&x, &wi)| wi * x.powi(deg as i32))
                    .sum();
                let exact = if deg % 2 == 0 {
                    2.0 / (deg as f64 + 1.0)
                } else {
                    0.0
                };
                assert!((acc - exact).abs() < 1e-13, "n={n} deg={deg}");
            }
        }
    }
}
