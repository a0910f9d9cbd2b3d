//! Closed-form pieces of the MFO/NLCMFO update.

use std::f64::consts::PI;

/// `cos(2πt)`, exact at quarter turns.
fn cos_two_pi(t: f64) -> f64 {
    // fmod is exact, so the reduction adds no rounding of its own
    let x = (2.0 * t).rem_euclid(2.0);
    if x == 0.5 || x == 1.5 {
        0.0
    } else if x == 1.0 {
        -1.0
    } else {
        (PI * x).cos()
    }
}

/// Number of flames kept active at iteration `l` of `max_iter`:
/// `round(n - l (n - 1) / max_iter)`, never below 1.
pub fn flame_count(n: usize, l: usize, max_iter: usize) -> usize {
    let n_f = n as f64;
    let count = (n_f - l as f64 * (n_f - 1.0) / max_iter as f64).round();
    (count.max(1.0) as usize).min(n.max(1))
}

/// Convergence constant `a`, falling linearly from -1 at `l = 0` to -2 at `l = max_iter`.
pub fn convergence_constant(l: usize, max_iter: usize) -> f64 {
    -1.0 - l as f64 / max_iter as f64
}

/// Plain MFO spiral parameter `t = (a - 1) u + 1` for a uniform draw `u` in `[0, 1)`.
pub fn t_mfo(a: f64, u: f64) -> f64 {
    (a - 1.0) * u + 1.0
}

/// NLCMFO spiral parameter `t = |(a - 1) cm + 1|` for a chaotic value `cm` in `[0, 1]`.
pub fn t_nlcmfo(a: f64, cm: f64) -> f64 {
    ((a - 1.0) * cm + 1.0).abs()
}

/// Nonlinear weight `4 exp(-(6 l / max_iter)^2)`.
pub fn nonlinear_weight(l: usize, max_iter: usize) -> f64 {
    let r = 6.0 * l as f64 / max_iter as f64;
    4.0 * (-(r * r)).exp()
}

/// Logarithmic spiral of a moth around its flame.
pub fn spiral_step_mfo(moth: &[f64], flame: &[f64], b: f64, t: f64, out: &mut [f64]) {
    let factor = (b * t).exp() * cos_two_pi(t);
    for ((o, &m), &f) in out.iter_mut().zip(moth).zip(flame) {
        *o = (f - m).abs() * factor + f;
    }
}

/// NLCMFO spiral: `w R_L ⊗ D e^{bt} cos(2πt) + R_L ⊗ F`.
///
/// The Lévy row scales the flame term as well, so a moth sitting on its flame
/// (`D = 0`) still lands on `R_L ⊗ F` rather than on the flame itself.
pub fn spiral_step_nlcmfo(moth: &[f64], flame: &[f64], b: f64, t: f64, w: f64, levy: &[f64], out: &mut [f64]) {
    let factor = (b * t).exp() * cos_two_pi(t);
    for (((o, &m), &f), &r) in out.iter_mut().zip(moth).zip(flame).zip(levy) {
        *o = w * r * (f - m).abs() * factor + r * f;
    }
}

/// Flame index followed by moth `i` when `flame_no` flames are active.
pub fn assign_flame(i: usize, flame_no: usize) -> usize {
    i.min(flame_no.saturating_sub(1))
}
