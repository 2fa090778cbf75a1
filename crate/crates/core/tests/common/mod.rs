#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use supportimpl::exactalg::{MultiPoly, Rational, Vars};
use supportimpl::trigsupport::{HarmonicTerm, SphericalSupport, TrigPoly};

pub const SUITE_SEED: u64 = 20_161_003;
pub const SUITE_SIZE: usize = 50;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::frac(n, d)
}

pub fn xy() -> Vars {
    Vars::new(&["x", "y"])
}

pub fn xy_poly(text: &str) -> MultiPoly {
    MultiPoly::parse(text, &xy()).unwrap()
}

pub const RABINOWITZ_PRINTED: &str = "-182284263 - 469762048*y^6 + 1269789696*y^2 + 33554432*x^7 - 490733568*x^4*y^2 \
    + 1610612736*x^4*y^4 - 134217728*x^5*y^2 + 268435456*x^6*y^2 + 16777216*x^8 + 6794772480*y^4*x + 9437184*x^6 \
    + 4294967296*y^8 + 317447424*x^2 - 141557760*x^5 - 1066991616*y^2*x^2 + 4294967296*y^6*x^2 + 2063597568*y^4*x^2 \
    - 2133983232*y^4 - 133373952*x^4 - 931627008*y^2*x + 77635584*x^3 - 6442450944*y^6*x + 1132462080*x^3*y^2 \
    - 2684354560*x^3*y^4";

pub const ROTOR_PRINTED: &str = "191102976*y^6 + 573308928*y^4*x^2 + 318504960*y^4 + 573308928*y^2*x^4 \
    - 509607936*y^2*x^2 + 113246208*y^2 + 191102976*x^6 - 254803968*x^4 + 113246208*x^2 - 16777216";

pub fn rabinowitz() -> TrigPoly {
    TrigPoly::new(q(1, 2), [(3, q(1, 16))], [])
}

pub fn rotor_example() -> TrigPoly {
    TrigPoly::new(q(1, 2), [(2, q(1, 6))], [])
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    let n = rng.gen_range(1..=6) * if rng.gen_bool(0.5) { 1 } else { -1 };
    q(n, rng.gen_range(1..=6))
}

/// One member of the seeded degree-law family. Odd members carry only odd
/// harmonics and no constant term; the rest always contain an even harmonic.
pub fn suite_member(i: usize) -> TrigPoly {
    let mut rng = ChaCha8Rng::seed_from_u64(SUITE_SEED + i as u64);
    let odd_only = i % 2 == 1;
    let n: u32 = if odd_only { [3, 5][rng.gen_range(0..2)] } else { rng.gen_range(2..=6) };
    let mut cos = Vec::new();
    let mut sin = Vec::new();
    for k in 1..=n {
        if odd_only && k % 2 == 0 {
            continue;
        }
        let keep = k == n || rng.gen_bool(0.5);
        if keep {
            cos.push((k, small_rational(&mut rng)));
        }
        if rng.gen_bool(0.4) {
            sin.push((k, small_rational(&mut rng)));
        }
    }
    let a0 = if odd_only { Rational::zero() } else { small_rational(&mut rng).abs() };
    let p = TrigPoly::new(a0, cos, sin);
    assert_eq!(p.degree(), n);
    p
}

pub fn suite() -> Vec<TrigPoly> {
    (0..SUITE_SIZE).map(suite_member).collect()
}

/// `(x + a11)² + (y + b11)² + (z − a10)² − a00²`, normalized.
pub fn expected_sphere(a00: &Rational, a10: &Rational, a11: &Rational, b11: &Rational) -> MultiPoly {
    let r = Vars::new(&["x", "y", "z"]);
    let v = |i| MultiPoly::var_idx(&r, i);
    let c = |x: &Rational| MultiPoly::constant(&r, x.clone());
    let f = &(&(&(&v(0) + &c(a11)).pow(2) + &(&v(1) + &c(b11)).pow(2)) + &(&v(2) - &c(a10)).pow(2)) - &c(&a00.pow(2));
    f.normalize()
}

pub fn sphere_support(a00: Rational, a10: Rational, a11: Rational, b11: Rational) -> SphericalSupport {
    SphericalSupport::new([
        HarmonicTerm { l: 0, m: 0, a: a00, b: Rational::zero() },
        HarmonicTerm { l: 1, m: 0, a: a10, b: Rational::zero() },
        HarmonicTerm { l: 1, m: 1, a: a11, b: b11 },
    ])
}

pub fn constant_width(m: u32) -> TrigPoly {
    let top = 2 * m + 1;
    TrigPoly::new(q(1, 1), [(1, q(1, 5)), (top, q(1, 4 * top as i64 * top as i64))], [(3, q(1, 200))])
}

pub fn rotor(n: u32, m: u32) -> TrigPoly {
    let mut cos = Vec::new();
    for k in 1..=m {
        cos.push((k * n - 1, q(1, 3 * (k * n) as i64 * (k * n) as i64)));
        cos.push((k * n + 1, q(1, 5 * (k * n + 1) as i64 * (k * n + 1) as i64)));
    }
    TrigPoly::new(q(1, 1), cos, [(n - 1, q(1, 100))])
}
