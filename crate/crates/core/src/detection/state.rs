use std::f64::consts::FRAC_PI_2;

use super::BernoulliPair;
use crate::error::{Error, Result};

const UNIT_NORM_TOL: f64 = 1e-12;

/// Real unit vector in two dimensions, coordinates `(a0, a1)` on `(|1>, |0>)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateVector2 {
    a0: f64,
    a1: f64,
}

impl StateVector2 {
    /// `|1>`, term present.
    pub const PRESENT: StateVector2 = StateVector2 { a0: 1.0, a1: 0.0 };
    /// `|0>`, term absent.
    pub const ABSENT: StateVector2 = StateVector2 { a0: 0.0, a1: 1.0 };

    pub fn new(a0: f64, a1: f64) -> Result<Self> {
        let norm2 = a0 * a0 + a1 * a1;
        if !norm2.is_finite() || (norm2 - 1.0).abs() > UNIT_NORM_TOL {
            return Err(Error::InvalidArgument(format!(
                "state ({a0}, {a1}) is not unit-norm"
            )));
        }
        Ok(Self { a0, a1 })
    }

    /// Scales `(a0, a1)` to unit length. Returns `None` for the zero vector.
    pub fn normalized(a0: f64, a1: f64) -> Option<Self> {
        let n = a0.hypot(a1);
        (n > 0.0 && n.is_finite()).then(|| Self {
            a0: a0 / n,
            a1: a1 / n,
        })
    }

    pub(crate) const fn from_unit(a0: f64, a1: f64) -> Self {
        Self { a0, a1 }
    }

    /// Basis vector of an occurrence symbol.
    pub fn occurrence(present: bool) -> Self {
        if present {
            Self::PRESENT
        } else {
            Self::ABSENT
        }
    }

    /// Amplitude of presence.
    pub fn a0(&self) -> f64 {
        self.a0
    }

    /// Amplitude of absence.
    pub fn a1(&self) -> f64 {
        self.a1
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.a0 * other.a0 + self.a1 * other.a1
    }

    /// 2-D cross product; its magnitude is the sine of the angle between the vectors.
    pub fn cross(&self, other: &Self) -> f64 {
        self.a0 * other.a1 - self.a1 * other.a0
    }

    /// Unsigned angle between the rays through `self` and `other`, in `[0, pi/2]`.
    pub fn ray_angle(&self, other: &Self) -> f64 {
        self.cross(other).abs().atan2(self.dot(other).abs())
    }

    /// The vector rotated a quarter turn clockwise.
    pub fn orthogonal(&self) -> Self {
        Self {
            a0: self.a1,
            a1: -self.a0,
        }
    }

    /// Flips the sign so the first nonzero coordinate is nonnegative.
    pub(crate) fn canonical_sign(self) -> Self {
        if self.a0 < 0.0 || (self.a0 == 0.0 && self.a1 < 0.0) {
            Self {
                a0: -self.a0,
                a1: -self.a1,
            }
        } else {
            self
        }
    }
}

/// Relevance vectors `(|m0>, |m1>)` with positive square-root amplitudes.
pub fn embed(p: BernoulliPair) -> (StateVector2, StateVector2) {
    let amp = |p1: f64| StateVector2::from_unit(p1.sqrt(), (1.0 - p1).sqrt());
    (amp(p.p1_m0()), amp(p.p1_m1()))
}

/// Born-rule probability `|<direction|state>|^2`.
pub fn born_probability(state: &StateVector2, direction: &StateVector2) -> f64 {
    let amp = state.dot(direction);
    (amp * amp).min(1.0)
}

/// Squared overlap of the two embedded distributions.
pub fn fidelity(p: BernoulliPair) -> f64 {
    let (q0, q1) = (p.p1_m0(), p.p1_m1());
    let overlap = (q0 * q1).sqrt() + ((1.0 - q0) * (1.0 - q1)).sqrt();
    (overlap * overlap).min(1.0)
}

/// `1 - fidelity(p)`, evaluated without cancellation as the squared sine of
/// the angle between the embedded states.
pub fn infidelity(p: BernoulliPair) -> f64 {
    let (q0, q1) = (p.p1_m0(), p.p1_m1());
    let sine = (q0 * (1.0 - q1)).sqrt() - ((1.0 - q0) * q1).sqrt();
    (sine * sine).min(1.0)
}

/// Angle `gamma` between the two relevance vectors.
pub fn overlap_angle(m0: &StateVector2, m1: &StateVector2) -> f64 {
    m0.ray_angle(m1)
}

/// Angle between each optimal vector and its relevance vector when the
/// measurement is placed symmetrically around the two states.
pub fn optimal_angle(gamma: f64) -> f64 {
    0.5 * (FRAC_PI_2 - gamma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn pair(a: f64, b: f64) -> BernoulliPair {
        BernoulliPair::new(a, b).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b}");
    }

    #[test]
    fn embed_worked_example() {
        let (m0, m1) = embed(pair(0.8, 1.0));
        close(m0.a0(), 0.8f64.sqrt(), 1e-15);
        close(m0.a1(), 0.2f64.sqrt(), 1e-15);
        assert_eq!((m1.a0(), m1.a1()), (1.0, 0.0));
    }

    #[test]
    fn embed_edges() {
        let (m0, m1) = embed(pair(0.0, 0.0));
        assert_eq!(m0, StateVector2::ABSENT);
        assert_eq!(m1, StateVector2::ABSENT);
        let (m0, m1) = embed(pair(0.5, 0.5));
        close(m0.a0(), FRAC_1_SQRT_2, 1e-15);
        close(m1.a1(), FRAC_1_SQRT_2, 1e-15);
    }

    #[test]
    fn born_examples() {
        let m1 = StateVector2::PRESENT;
        close(born_probability(&m1, &StateVector2::PRESENT), 1.0, 0.0);
        let (m0, _) = embed(pair(0.8, 1.0));
        close(born_probability(&m0, &StateVector2::PRESENT), 0.8, 1e-15);
        let s = StateVector2::new(FRAC_1_SQRT_2, FRAC_1_SQRT_2).unwrap();
        let d = StateVector2::new(FRAC_1_SQRT_2, -FRAC_1_SQRT_2).unwrap();
        close(born_probability(&s, &d), 0.0, 1e-15);
    }

    #[test]
    fn fidelity_examples() {
        close(fidelity(pair(0.8, 1.0)), 0.8, 1e-15);
        for p in [0.0, 0.13, 0.5, 0.99, 1.0] {
            close(fidelity(pair(p, p)), 1.0, 1e-15);
            assert_eq!(infidelity(pair(p, p)), 0.0);
        }
        let crime = fidelity(pair(223.0 / 1234.0, 65.0 / 474.0));
        close(crime, 0.998, 2e-3);
        close(crime, 0.99644, 1e-5);
    }

    #[test]
    fn infidelity_complements_fidelity() {
        for (a, b) in [(0.8, 1.0), (0.1, 0.7), (0.0, 1.0), (0.3, 0.31)] {
            close(fidelity(pair(a, b)) + infidelity(pair(a, b)), 1.0, 1e-15);
        }
    }

    #[test]
    fn overlap_angle_examples() {
        let (m0, m1) = embed(pair(0.8, 1.0));
        close(overlap_angle(&m0, &m0), 0.0, 0.0);
        close(
            overlap_angle(&StateVector2::PRESENT, &StateVector2::ABSENT),
            FRAC_PI_2,
            0.0,
        );
        close(overlap_angle(&m0, &m1), 0.8f64.sqrt().acos(), 1e-15);
        close(overlap_angle(&m0, &m1), 0.46365, 1e-5);
    }

    #[test]
    fn optimal_angle_examples() {
        close(optimal_angle(FRAC_PI_2), 0.0, 0.0);
        close(optimal_angle(0.0), std::f64::consts::FRAC_PI_4, 0.0);
        close(optimal_angle(0.8f64.sqrt().acos()), 0.55357, 1e-5);
    }

    #[test]
    fn new_rejects_non_unit() {
        assert!(StateVector2::new(1.0, 1.0).is_err());
        assert!(StateVector2::new(f64::NAN, 0.0).is_err());
        assert!(StateVector2::normalized(0.0, 0.0).is_none());
        let v = StateVector2::normalized(3.0, 4.0).unwrap();
        close(v.a0(), 0.6, 1e-15);
    }

    #[test]
    fn canonical_sign_rule() {
        let v = StateVector2::from_unit(-0.6, 0.8).canonical_sign();
        assert_eq!((v.a0(), v.a1()), (0.6, -0.8));
        let v = StateVector2::from_unit(0.0, -1.0).canonical_sign();
        assert_eq!((v.a0(), v.a1()), (0.0, 1.0));
    }
}
