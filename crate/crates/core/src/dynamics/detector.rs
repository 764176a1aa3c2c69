use crate::poly::Poly;

/// A k-good property of point sets in the plane, given by a polynomial
/// whose zeros on a linear piece of the motion are exactly the moments the
/// property holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Detector {
    /// Three points on a common line (k = 3). Quadratic in time.
    Collinearity,
    /// Four points on a common circle or line (k = 4). Degree at most 4.
    Concyclicity,
}

impl Detector {
    pub fn arity(&self) -> usize {
        match self {
            Detector::Collinearity => 3,
            Detector::Concyclicity => 4,
        }
    }

    /// Event polynomial for the particles whose motions `(x(t), y(t))` are
    /// given, in the order given. Reordering the particles only flips the
    /// sign.
    pub fn event_polynomial(&self, motions: &[(Poly, Poly)]) -> Poly {
        assert_eq!(motions.len(), self.arity(), "wrong number of particles");
        match self {
            Detector::Collinearity => {
                let (xi, yi) = &motions[0];
                let dx1 = &motions[1].0 - xi;
                let dy1 = &motions[1].1 - yi;
                let dx2 = &motions[2].0 - xi;
                let dy2 = &motions[2].1 - yi;
                &(&dx1 * &dy2) - &(&dy1 * &dx2)
            }
            Detector::Concyclicity => {
                // Rows (x^2 + y^2, x, y, 1); subtracting the last row leaves a
                // 3x3 determinant.
                let lift = |(x, y): &(Poly, Poly)| &(x * x) + &(y * y);
                let (xl, yl) = &motions[3];
                let wl = lift(&motions[3]);
                let rows: Vec<[Poly; 3]> = motions[..3]
                    .iter()
                    .map(|m| [&lift(m) - &wl, &m.0 - xl, &m.1 - yl])
                    .collect();
                det3(&rows)
            }
        }
    }

    /// Evaluates the property's determinant at fixed floating-point
    /// positions. Used for display and for independent cross-checks.
    pub fn evaluate_f64(&self, points: &[(f64, f64)]) -> f64 {
        match self {
            Detector::Collinearity => {
                let (a, b, c) = (points[0], points[1], points[2]);
                (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
            }
            Detector::Concyclicity => {
                let l = points[3];
                let lw = l.0 * l.0 + l.1 * l.1;
                let r: Vec<[f64; 3]> = points[..3]
                    .iter()
                    .map(|p| [p.0 * p.0 + p.1 * p.1 - lw, p.0 - l.0, p.1 - l.1])
                    .collect();
                r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
                    - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
                    + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0])
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Detector::Collinearity => "collinearity",
            Detector::Concyclicity => "concyclicity",
        }
    }
}

fn det3(r: &[[Poly; 3]]) -> Poly {
    let minor = |a: &Poly, b: &Poly, c: &Poly, d: &Poly| &(a * d) - &(b * c);
    let t0 = &r[0][0] * &minor(&r[1][1], &r[1][2], &r[2][1], &r[2][2]);
    let t1 = &r[0][1] * &minor(&r[1][0], &r[1][2], &r[2][0], &r[2][2]);
    let t2 = &r[0][2] * &minor(&r[1][0], &r[1][1], &r[2][0], &r[2][1]);
    &(&t0 - &t1) + &t2
}
