//! Seeded random shapes and placements.

use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geom::{Point, Triangle};

/// Minimum gap kept between the sampled angles and every boundary of the
/// ordered simplex.
pub const ANGLE_MARGIN: f64 = 1e-3;

/// Independent stream per sample index, so results do not depend on the
/// order samples are evaluated in.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Angles `(alpha, beta, gamma)` with `alpha < beta < gamma`, uniform on
/// the ordered simplex shrunk by `ANGLE_MARGIN`, additionally rejecting
/// shapes whose consecutive sides differ by less than `ANGLE_MARGIN`
/// relative to the longest side (near-right shapes with a tiny `alpha`
/// pass the angle test with `b` almost equal to `c`).
pub fn sample_angles(rng: &mut impl Rng) -> (f64, f64, f64) {
    loop {
        let alpha = rng.random_range(0.0..PI / 3.0);
        let beta = rng.random_range(0.0..PI / 2.0);
        let gamma = PI - alpha - beta;
        if !(alpha > ANGLE_MARGIN && beta - alpha > ANGLE_MARGIN && gamma - beta > ANGLE_MARGIN) {
            continue;
        }
        let (a, b, c) = (alpha.sin(), beta.sin(), gamma.sin());
        if (b - a) >= ANGLE_MARGIN * c && (c - b) >= ANGLE_MARGIN * c {
            return (alpha, beta, gamma);
        }
    }
}

/// Triangle with the given angles and unit circumdiameter, labeled
/// `[A, B, C]` with `A` at the origin and `B` on the positive x-axis.
pub fn triangle_from_angles(alpha: f64, beta: f64) -> Triangle {
    let gamma = PI - alpha - beta;
    let b = beta.sin();
    let c = gamma.sin();
    let a_pt = Point::new(0.0, 0.0);
    let b_pt = Point::new(c, 0.0);
    let c_pt = Point::new(b * alpha.cos(), b * alpha.sin());
    Triangle::new(a_pt, b_pt, c_pt).expect("sampled angles give a nondegenerate triangle")
}

/// A random scalene triangle under a random similarity (rotation, scale in
/// `[0.1, 10]`, translation, optional reflection) with shuffled vertices.
pub fn random_scalene(rng: &mut impl Rng) -> Triangle {
    let (alpha, beta, _) = sample_angles(rng);
    let base = triangle_from_angles(alpha, beta);
    let rot = rng.random_range(0.0..TAU);
    let scale = 10f64.powf(rng.random_range(-1.0..1.0));
    let shift = Point::new(rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0));
    let reflect = rng.random::<bool>();
    let mut v = base.vertices().map(|p| {
        let p = if reflect { Point::new(p.x, -p.y) } else { p };
        p.rotate(rot) * scale + shift
    });
    let k = rng.random_range(0..3);
    v.rotate_left(k);
    Triangle::new(v[0], v[1], v[2]).expect("similarity keeps the triangle nondegenerate")
}
