use serde::{Deserialize, Serialize};

use super::TrigPoly;
use crate::exactalg::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    HasEvenHarmonic,
    OddOnly,
}

/// `OddOnly` iff `a0 = 0` and every even-index coefficient vanishes.
pub fn parity_class(p: &TrigPoly) -> Parity {
    if p.a0().is_zero() && p.spectrum().iter().all(|k| k % 2 == 1) {
        Parity::OddOnly
    } else {
        Parity::HasEvenHarmonic
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClassKind {
    Circle,
    ConstantWidth { alpha: Rational },
    Rotor { n: u32, rho: Rational },
    Generic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    #[serde(flatten)]
    pub kind: ClassKind,
    /// Harmonic indices `k ≥ 1` present in `p`.
    pub spectrum: Vec<u32>,
    /// Every `n ≥ 3` with each spectral index `≡ ±1 (mod n)`.
    pub rotor_orders: Vec<u32>,
    /// `α` with `p(θ) + p(θ + π) = α` identically, when such an `α` exists.
    pub width: Option<Rational>,
}

/// Circle for `N ≤ 1`; otherwise constant width when the spectrum is odd,
/// then the largest rotor order, then generic.
pub fn classify(p: &TrigPoly) -> Classification {
    let spectrum: Vec<u32> = p.spectrum().into_iter().collect();
    let n_max = p.degree() + 1;
    let rotor_orders: Vec<u32> = (3..=n_max)
        .filter(|&n| spectrum.iter().all(|&k| k % n == 1 || k % n == n - 1))
        .collect();
    let sum = p + &p.shift_by_pi();
    let width = (sum.degree() == 0).then(|| sum.a0().clone());
    let kind = if p.degree() <= 1 {
        ClassKind::Circle
    } else if spectrum.iter().all(|k| k % 2 == 1) {
        ClassKind::ConstantWidth { alpha: &Rational::from(2) * p.a0() }
    } else if let Some(&n) = rotor_orders.last() {
        ClassKind::Rotor { n, rho: p.a0().clone() }
    } else {
        ClassKind::Generic
    };
    Classification { kind, spectrum, rotor_orders, width }
}
