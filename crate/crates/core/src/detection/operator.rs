use super::StateVector2;

/// Real symmetric 2x2 operator `[[h00, h01], [h01, h11]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermitianOperator2 {
    pub h00: f64,
    pub h01: f64,
    pub h11: f64,
}

impl HermitianOperator2 {
    pub const ZERO: HermitianOperator2 = HermitianOperator2 {
        h00: 0.0,
        h01: 0.0,
        h11: 0.0,
    };

    /// Outer product `weight * |v><v|`.
    pub fn projector(v: &StateVector2, weight: f64) -> Self {
        Self {
            h00: weight * v.a0() * v.a0(),
            h01: weight * v.a0() * v.a1(),
            h11: weight * v.a1() * v.a1(),
        }
    }

    pub fn trace(&self) -> f64 {
        self.h00 + self.h11
    }

    /// `<v| H |v>`.
    pub fn expectation(&self, v: &StateVector2) -> f64 {
        let (x, y) = (v.a0(), v.a1());
        self.h00 * x * x + 2.0 * self.h01 * x * y + self.h11 * y * y
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.h00.abs().max(self.h01.abs()).max(self.h11.abs())
    }
}

impl std::ops::Sub for HermitianOperator2 {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Self {
            h00: self.h00 - rhs.h00,
            h01: self.h01 - rhs.h01,
            h11: self.h11 - rhs.h11,
        }
    }
}

impl std::ops::Add for HermitianOperator2 {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self {
            h00: self.h00 + rhs.h00,
            h01: self.h01 + rhs.h01,
            h11: self.h11 + rhs.h11,
        }
    }
}

/// Closed-form spectral decomposition, eigenvalues in descending order.
///
/// The eigenvectors come from the Jacobi rotation angle
/// `phi = atan2(2 h01, h00 - h11) / 2`, which stays accurate when the
/// eigenvalues are close. A scalar operator returns the standard basis.
/// Each eigenvector has a nonnegative first nonzero coordinate.
pub fn eigendecompose(h: &HermitianOperator2) -> [(f64, StateVector2); 2] {
    let mean = 0.5 * (h.h00 + h.h11);
    let half_diff = 0.5 * (h.h00 - h.h11);
    let radius = half_diff.hypot(h.h01);
    if radius == 0.0 {
        return [(mean, StateVector2::PRESENT), (mean, StateVector2::ABSENT)];
    }
    let phi = 0.5 * (2.0 * h.h01).atan2(h.h00 - h.h11);
    let (s, c) = phi.sin_cos();
    let upper = StateVector2::from_unit(c, s);
    let lower = upper.orthogonal();
    [
        (mean + radius, upper.canonical_sign()),
        (mean - radius, lower.canonical_sign()),
    ]
}
