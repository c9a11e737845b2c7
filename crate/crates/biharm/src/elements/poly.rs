//! Bivariate polynomials in monomial form on the reference triangle.
//!
//! The reference triangle has vertices (0,0), (1,0), (0,1). Monomials of
//! total degree <= d are enumerated degree-by-degree:
//! (0,0), (1,0), (0,1), (2,0), (1,1), (0,2), ...

/// Number of monomials x^a y^b with a + b <= degree.
pub fn space_dim(degree: usize) -> usize {
    (degree + 1) * (degree + 2) / 2
}

/// Exponent pairs (a, b) for all monomials of total degree <= degree,
/// ordered by total degree, then descending in a.
pub fn monomial_exponents(degree: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(space_dim(degree));
    for t in 0..=degree {
        for b in 0..=t {
            out.push((t - b, b));
        }
    }
    out
}

/// Exact integral of x^a y^b over the reference triangle: a! b! / (a+b+2)!.
pub fn monomial_integral(a: usize, b: usize) -> f64 {
    // a!b!/(a+b+2)! = 1 / [ (a+1)(a+2)...(a+b+2) / b! ]; compute stably as a product.
    let mut val = 1.0;
    for i in 1..=b {
        val *= i as f64 / (a + i) as f64;
    }
    for i in (a + b + 1)..=(a + b + 2) {
        val /= i as f64;
    }
    // after the loop: val = b!/( (a+1)..(a+b) ) / ((a+b+1)(a+b+2))
    // check: a!b!/(a+b+2)! = b! / [ (a+1)(a+2)...(a+b+2) ]
    val
}

/// Polynomial with coefficients over the monomial basis of its degree.
#[derive(Clone, Debug)]
pub struct Poly2 {
    pub degree: usize,
    pub coeffs: Vec<f64>,
}

impl Poly2 {
    pub fn zero(degree: usize) -> Self {
        Poly2 {
            degree,
            coeffs: vec![0.0; space_dim(degree)],
        }
    }

    /// The single monomial x^a y^b as a polynomial of the given degree.
    pub fn monomial(degree: usize, a: usize, b: usize) -> Self {
        let mut p = Poly2::zero(degree);
        let idx = monomial_exponents(degree)
            .iter()
            .position(|&e| e == (a, b))
            .expect("monomial within degree");
        p.coeffs[idx] = 1.0;
        p
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        let mut acc = 0.0;
        for (c, (a, b)) in self.coeffs.iter().zip(monomial_exponents(self.degree)) {
            if *c != 0.0 {
                acc += c * x.powi(a as i32) * y.powi(b as i32);
            }
        }
        acc
    }

    pub fn ddx(&self) -> Poly2 {
        let deg = self.degree.saturating_sub(1);
        let mut out = Poly2::zero(deg);
        let exps_out = monomial_exponents(deg);
        for (c, (a, b)) in self.coeffs.iter().zip(monomial_exponents(self.degree)) {
            if *c != 0.0 && a > 0 {
                let idx = exps_out.iter().position(|&e| e == (a - 1, b)).unwrap();
                out.coeffs[idx] += c * a as f64;
            }
        }
        out
    }

    pub fn ddy(&self) -> Poly2 {
        let deg = self.degree.saturating_sub(1);
        let mut out = Poly2::zero(deg);
        let exps_out = monomial_exponents(deg);
        for (c, (a, b)) in self.coeffs.iter().zip(monomial_exponents(self.degree)) {
            if *c != 0.0 && b > 0 {
                let idx = exps_out.iter().position(|&e| e == (a, b - 1)).unwrap();
                out.coeffs[idx] += c * b as f64;
            }
        }
        out
    }

    pub fn add_scaled(&mut self, other: &Poly2, s: f64) {
        assert_eq!(self.degree, other.degree);
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += s * b;
        }
    }

    /// Promote to a higher-degree representation.
    pub fn with_degree(&self, degree: usize) -> Poly2 {
        assert!(degree >= self.degree);
        let mut out = Poly2::zero(degree);
        let exps_out = monomial_exponents(degree);
        for (c, (a, b)) in self.coeffs.iter().zip(monomial_exponents(self.degree)) {
            if *c != 0.0 {
                let idx = exps_out.iter().position(|&e| e == (a, b)).unwrap();
                out.coeffs[idx] = *c;
            }
        }
        out
    }
}

/// Legendre polynomial P_n(t) on [-1, 1] via the three-term recurrence.
pub fn legendre(n: usize, t: f64) -> f64 {
    match n {
        0 => 1.0,
        1 => t,
        _ => {
            let (mut pm, mut p) = (1.0, t);
            for k in 1..n {
                let next = ((2 * k + 1) as f64 * t * p - k as f64 * pm) / (k + 1) as f64;
                pm = p;
                p = next;
            }
            p
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_integrals_match_factorial_formula() {
        // a!b!/(a+b+2)! spot-checked against hand values
        assert!((monomial_integral(0, 0) - 0.5).abs() < 1e-15);
        assert!((monomial_integral(1, 0) - 1.0 / 6.0).abs() < 1e-15);
        assert!((monomial_integral(0, 1) - 1.0 / 6.0).abs() < 1e-15);
        assert!((monomial_integral(1, 1) - 1.0 / 24.0).abs() < 1e-16);
        assert!((monomial_integral(2, 0) - 1.0 / 12.0).abs() < 1e-16);
        // 2!3!/7! = 12/5040
        assert!((monomial_integral(2, 3) - 12.0 / 5040.0).abs() < 1e-16);
    }

    #[test]
    fn derivative_of_monomials() {
        let p = Poly2::monomial(3, 2, 1); // x^2 y
        let px = p.ddx();
        let py = p.ddy();
        assert!((px.eval(0.3, 0.7) - 2.0 * 0.3 * 0.7).abs() < 1e-15);
        assert!((py.eval(0.3, 0.7) - 0.3f64.powi(2)).abs() < 1e-15);
    }

    #[test]
    fn legendre_values() {
        assert!((legendre(2, 0.5) - (3.0 * 0.25 - 1.0) / 2.0).abs() < 1e-15);
        assert!((legendre(3, -0.2) - (5.0 * (-0.2f64).powi(3) - 3.0 * (-0.2)) / 2.0).abs() < 1e-15);
        // P_n(1) = 1
        for n in 0..8 {
            assert!((legendre(n, 1.0) - 1.0).abs() < 1e-13);
        }
    }
}
