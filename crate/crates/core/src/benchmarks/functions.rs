//! Formulas for F1–F23 and the constant tables of the fixed-dimension functions.

use std::f64::consts::{E, PI};

/// Penalty term of F12/F13.
pub(crate) fn penalty(x: f64, a: f64, k: f64, m: i32) -> f64 {
    if x > a {
        k * (x - a).powi(m)
    } else if x < -a {
        k * (-x - a).powi(m)
    } else {
        0.0
    }
}

pub(crate) fn sphere(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

fn f2(x: &[f64]) -> f64 {
    let sum: f64 = x.iter().map(|v| v.abs()).sum();
    let prod: f64 = x.iter().map(|v| v.abs()).product();
    sum + prod
}

fn f3(x: &[f64]) -> f64 {
    let mut running = 0.0;
    let mut total = 0.0;
    for v in x {
        running += v;
        total += running * running;
    }
    total
}

fn f4(x: &[f64]) -> f64 {
    x.iter().fold(0.0, |m, v| m.max(v.abs()))
}

pub(crate) fn rosenbrock(x: &[f64]) -> f64 {
    x.windows(2).map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (w[0] - 1.0).powi(2)).sum()
}

fn f6(x: &[f64]) -> f64 {
    x.iter().map(|v| (v + 0.5).floor().powi(2)).sum()
}

fn f7(x: &[f64]) -> f64 {
    x.iter().enumerate().map(|(i, v)| (i + 1) as f64 * v.powi(4)).sum()
}

pub(crate) fn schwefel(x: &[f64]) -> f64 {
    x.iter().map(|v| -v * v.abs().sqrt().sin()).sum()
}

pub(crate) fn rastrigin(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v - 10.0 * (2.0 * PI * v).cos() + 10.0).sum()
}

pub(crate) fn ackley(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let sq = x.iter().map(|v| v * v).sum::<f64>() / n;
    let cs = x.iter().map(|v| (2.0 * PI * v).cos()).sum::<f64>() / n;
    -20.0 * (-0.2 * sq.sqrt()).exp() - cs.exp() + 20.0 + E
}

pub(crate) fn griewank(x: &[f64]) -> f64 {
    let sum = x.iter().map(|v| v * v).sum::<f64>() / 4000.0;
    let prod: f64 = x.iter().enumerate().map(|(i, v)| (v / ((i + 1) as f64).sqrt()).cos()).product();
    sum - prod + 1.0
}

fn f12(x: &[f64]) -> f64 {
    let n = x.len();
    let y: Vec<f64> = x.iter().map(|v| 1.0 + (v + 1.0) / 4.0).collect();
    let inner: f64 = y.windows(2).map(|w| (w[0] - 1.0).powi(2) * (1.0 + 10.0 * (PI * w[1]).sin().powi(2))).sum();
    let body = 10.0 * (PI * y[0]).sin().powi(2) + inner + (y[n - 1] - 1.0).powi(2);
    PI / n as f64 * body + x.iter().map(|&v| penalty(v, 10.0, 100.0, 4)).sum::<f64>()
}

fn f13(x: &[f64]) -> f64 {
    let n = x.len();
    let inner: f64 = x.windows(2).map(|w| (w[0] - 1.0).powi(2) * (1.0 + (3.0 * PI * w[1]).sin().powi(2))).sum();
    let last = x[n - 1];
    let body = (3.0 * PI * x[0]).sin().powi(2) + inner + (last - 1.0).powi(2) * (1.0 + (2.0 * PI * last).sin().powi(2));
    0.1 * body + x.iter().map(|&v| penalty(v, 5.0, 100.0, 4)).sum::<f64>()
}

const FOXHOLE_COORDS: [f64; 5] = [-32.0, -16.0, 0.0, 16.0, 32.0];

fn f14(x: &[f64]) -> f64 {
    let mut acc = 1.0 / 500.0;
    for j in 0..25 {
        let a1 = FOXHOLE_COORDS[j % 5];
        let a2 = FOXHOLE_COORDS[j / 5];
        acc += 1.0 / ((j + 1) as f64 + (x[0] - a1).powi(6) + (x[1] - a2).powi(6));
    }
    1.0 / acc
}

const KOWALIK_A: [f64; 11] = [0.1957, 0.1947, 0.1735, 0.16, 0.0844, 0.0627, 0.0456, 0.0342, 0.0323, 0.0235, 0.0246];
const KOWALIK_INV_B: [f64; 11] = [0.25, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0];

fn f15(x: &[f64]) -> f64 {
    KOWALIK_A
        .iter()
        .zip(KOWALIK_INV_B)
        .map(|(a, inv_b)| {
            let b = 1.0 / inv_b;
            let model = x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
            (a - model).powi(2)
        })
        .sum()
}

fn f16(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    4.0 * a * a - 2.1 * a.powi(4) + a.powi(6) / 3.0 + a * b - 4.0 * b * b + 4.0 * b.powi(4)
}

fn f17(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    (b - 5.1 / (4.0 * PI * PI) * a * a + 5.0 / PI * a - 6.0).powi(2) + 10.0 * (1.0 - 1.0 / (8.0 * PI)) * a.cos() + 10.0
}

fn f18(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    let p = 1.0 + (a + b + 1.0).powi(2) * (19.0 - 14.0 * a + 3.0 * a * a - 14.0 * b + 6.0 * a * b + 3.0 * b * b);
    let q =
        30.0 + (2.0 * a - 3.0 * b).powi(2) * (18.0 - 32.0 * a + 12.0 * a * a + 48.0 * b - 36.0 * a * b + 27.0 * b * b);
    p * q
}

const HARTMANN_C: [f64; 4] = [1.0, 1.2, 3.0, 3.2];
const HARTMANN3_A: [[f64; 3]; 4] = [[3.0, 10.0, 30.0], [0.1, 10.0, 35.0], [3.0, 10.0, 30.0], [0.1, 10.0, 35.0]];
const HARTMANN3_P: [[f64; 3]; 4] =
    [[0.3689, 0.117, 0.2673], [0.4699, 0.4387, 0.747], [0.1091, 0.8732, 0.5547], [0.03815, 0.5743, 0.8828]];
const HARTMANN6_A: [[f64; 6]; 4] = [
    [10.0, 3.0, 17.0, 3.5, 1.7, 8.0],
    [0.05, 10.0, 17.0, 0.1, 8.0, 14.0],
    [3.0, 3.5, 1.7, 10.0, 17.0, 8.0],
    [17.0, 8.0, 0.05, 10.0, 0.1, 14.0],
];
const HARTMANN6_P: [[f64; 6]; 4] = [
    [0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886],
    [0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991],
    [0.2348, 0.1415, 0.3522, 0.2883, 0.3047, 0.6650],
    [0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381],
];

fn hartmann<const D: usize>(x: &[f64], a: &[[f64; D]; 4], p: &[[f64; D]; 4]) -> f64 {
    -(0..4)
        .map(|i| {
            let s: f64 = (0..D).map(|j| a[i][j] * (x[j] - p[i][j]).powi(2)).sum();
            HARTMANN_C[i] * (-s).exp()
        })
        .sum::<f64>()
}

const SHEKEL_A: [[f64; 4]; 10] = [
    [4.0, 4.0, 4.0, 4.0],
    [1.0, 1.0, 1.0, 1.0],
    [8.0, 8.0, 8.0, 8.0],
    [6.0, 6.0, 6.0, 6.0],
    [3.0, 7.0, 3.0, 7.0],
    [2.0, 9.0, 2.0, 9.0],
    [5.0, 5.0, 3.0, 3.0],
    [8.0, 1.0, 8.0, 1.0],
    [6.0, 2.0, 6.0, 2.0],
    [7.0, 3.6, 7.0, 3.6],
];
const SHEKEL_C: [f64; 10] = [0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5];

fn shekel(x: &[f64], m: usize) -> f64 {
    -(0..m)
        .map(|i| {
            let d: f64 = x.iter().zip(&SHEKEL_A[i]).map(|(v, a)| (v - a).powi(2)).sum();
            1.0 / (d + SHEKEL_C[i])
        })
        .sum::<f64>()
}

/// Noise-free value of built-in function `number` (1..=23). Lengths are checked by the caller.
pub(crate) fn eval(number: u8, x: &[f64]) -> f64 {
    match number {
        1 => sphere(x),
        2 => f2(x),
        3 => f3(x),
        4 => f4(x),
        5 => rosenbrock(x),
        6 => f6(x),
        7 => f7(x),
        8 => schwefel(x),
        9 => rastrigin(x),
        10 => ackley(x),
        11 => griewank(x),
        12 => f12(x),
        13 => f13(x),
        14 => f14(x),
        15 => f15(x),
        16 => f16(x),
        17 => f17(x),
        18 => f18(x),
        19 => hartmann(x, &HARTMANN3_A, &HARTMANN3_P),
        20 => hartmann(x, &HARTMANN6_A, &HARTMANN6_P),
        21 => shekel(x, 5),
        22 => shekel(x, 7),
        23 => shekel(x, 10),
        _ => unreachable!("built-in functions are F1..F23"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn penalty_branches() {
        assert_eq!(penalty(12.0, 10.0, 100.0, 4), 100.0 * 16.0);
        assert_eq!(penalty(-12.0, 10.0, 100.0, 4), 100.0 * 16.0);
        assert_eq!(penalty(3.0, 10.0, 100.0, 4), 0.0);
    }

    #[test]
    fn hand_computed_points() {
        assert_eq!(f2(&[1.0, -2.0]), 3.0 + 2.0);
        assert_eq!(f3(&[1.0, 2.0, 3.0]), 1.0 + 9.0 + 36.0);
        assert_eq!(f4(&[1.0, -7.0, 3.0]), 7.0);
        assert_eq!(f6(&[0.4, -0.6, 1.5]), 0.0 + 1.0 + 4.0);
        assert_eq!(f7(&[1.0, 1.0]), 3.0);
        assert_eq!(rosenbrock(&[0.0, 0.0]), 1.0);
        assert_eq!(rastrigin(&[1.0]), 1.0);
    }

    #[test]
    fn shekel_near_first_centre() {
        // 1/0.1 + 1/36.2 + 1/64.2 + 1/16.4 + 1/20.4 at (4,4,4,4)
        let expect = -(10.0 + 1.0 / 36.2 + 1.0 / 64.2 + 1.0 / 16.4 + 1.0 / 20.4);
        assert!((shekel(&[4.0; 4], 5) - expect).abs() < 1e-12);
    }
}
