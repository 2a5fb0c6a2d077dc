//! 3D complex FFTs built on rustfft, with the transform normalization used
//! throughout the crate:
//!
//!   forward:  coeffs(m) = (L/n)^3 * sum_x f(x) e^{-i xi_m . x}
//!   inverse:  f(x) = L^{-3} * sum_m coeffs(m) e^{+i xi_m . x}
//!
//! which is the Riemann-sum discretization of the continuum pair
//! f_hat(xi) = int f e^{-i xi.x} dx, f(x) = (2 pi)^{-3} int f_hat e^{+i xi.x} dxi.
//!
//! Real physical fields are moved two at a time through one complex transform
//! where the call sites allow it; the packed paths agree with the plain ones
//! to rounding.

use num_complex::Complex64;
use rayon::prelude::*;
use rustfft::{Fft, FftPlanner};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::grid::Grid;

#[derive(Clone)]
struct Plans {
    fwd: Arc<dyn Fft<f64>>,
    inv: Arc<dyn Fft<f64>>,
}

fn plans(n: usize) -> Plans {
    static CACHE: OnceLock<Mutex<HashMap<usize, Plans>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    guard
        .entry(n)
        .or_insert_with(|| {
            let mut planner = FftPlanner::new();
            Plans {
                fwd: planner.plan_fft_forward(n),
                inv: planner.plan_fft_inverse(n),
            }
        })
        .clone()
}

/// Borrow a reusable per-thread buffer of the given length.
fn with_pooled_buffer<R>(len: usize, f: impl FnOnce(&mut [Complex64]) -> R) -> R {
    use std::cell::RefCell;
    thread_local! {
        static POOL: RefCell<HashMap<usize, Vec<Vec<Complex64>>>> = RefCell::new(HashMap::new());
    }
    POOL.with(|pool| {
        let mut buf = pool
            .borrow_mut()
            .get_mut(&len)
            .and_then(|stack| stack.pop())
            .unwrap_or_else(|| vec![Complex64::default(); len]);
        let r = f(&mut buf);
        pool.borrow_mut().entry(len).or_default().push(buf);
        r
    })
}

/// Unnormalized 3D FFT over all three axes, in place.
pub fn fft3(buf: &mut [Complex64], n: usize, inverse: bool) {
    debug_assert_eq!(buf.len(), n * n * n);
    let p = plans(n);
    let plan = if inverse { p.inv } else { p.fwd };
    let scratch_len = plan.get_inplace_scratch_len();

    // Axis 2: pencils are contiguous; each i-plane holds n of them.
    buf.par_chunks_mut(n * n).for_each_init(
        || vec![Complex64::default(); scratch_len],
        |scratch, plane| plan.process_with_scratch(plane, scratch),
    );

    // Axis 1: within each i-plane, transpose (j,k), transform, transpose back.
    buf.par_chunks_mut(n * n).for_each_init(
        || {
            (
                vec![Complex64::default(); n * n],
                vec![Complex64::default(); scratch_len],
            )
        },
        |(tmp, scratch), plane| {
            for j in 0..n {
                for k in 0..n {
                    tmp[k * n + j] = plane[j * n + k];
                }
            }
            plan.process_with_scratch(tmp, scratch);
            for k in 0..n {
                for j in 0..n {
                    plane[j * n + k] = tmp[k * n + j];
                }
            }
        },
    );

    // Axis 0: pencils have stride n^2. Work tile by tile (one (i,k) slab per
    // fixed j) so the strided traffic stays cache resident.
    let base = buf.as_mut_ptr() as usize;
    (0..n).into_par_iter().for_each_init(
        || {
            (
                vec![Complex64::default(); n * n],
                vec![Complex64::default(); scratch_len],
            )
        },
        |(tile, scratch), j| {
            // Each j owns the disjoint index set {(i*n + j)*n + k}.
            let ptr = base as *mut Complex64;
            unsafe {
                for i in 0..n {
                    let row = ptr.add((i * n + j) * n);
                    for k in 0..n {
                        tile[k * n + i] = *row.add(k);
                    }
                }
                plan.process_with_scratch(tile, scratch);
                for i in 0..n {
                    let row = ptr.add((i * n + j) * n);
                    for k in 0..n {
                        *row.add(k) = tile[k * n + i];
                    }
                }
            }
        },
    );
}

/// Forward transform of one real field, including the (L/n)^3 scale.
pub fn forward_real(grid: &Grid, phys: &[f64]) -> Vec<Complex64> {
    debug_assert_eq!(phys.len(), grid.len());
    let n = grid.n();
    let scale = grid.dx().powi(3);
    let mut buf: Vec<Complex64> = phys
        .par_iter()
        .map(|&x| Complex64::new(x * scale, 0.0))
        .collect();
    fft3(&mut buf, n, false);
    buf
}

/// Inverse transform to a real field (real part; imaginary parts cancel for
/// Hermitian input), including the L^{-3} scale.
pub fn inverse_real(grid: &Grid, coeffs: &[Complex64]) -> Vec<f64> {
    debug_assert_eq!(coeffs.len(), grid.len());
    let n = grid.n();
    let mut buf = coeffs.to_vec();
    fft3(&mut buf, n, true);
    let scale = grid.box_length().powi(-3);
    buf.par_iter().map(|c| c.re * scale).collect()
}

/// Forward transform of a complex physical field, including the (L/n)^3 scale.
pub fn forward_complex(grid: &Grid, phys: &[Complex64]) -> Vec<Complex64> {
    debug_assert_eq!(phys.len(), grid.len());
    let mut buf = phys.to_vec();
    fft3(&mut buf, grid.n(), false);
    let scale = grid.dx().powi(3);
    buf.par_iter_mut().for_each(|c| *c *= scale);
    buf
}

/// Inverse transform to a complex physical field, including the L^{-3} scale.
pub fn inverse_complex(grid: &Grid, coeffs: &[Complex64]) -> Vec<Complex64> {
    debug_assert_eq!(coeffs.len(), grid.len());
    let mut buf = coeffs.to_vec();
    fft3(&mut buf, grid.n(), true);
    let scale = grid.box_length().powi(-3);
    buf.par_iter_mut().for_each(|c| *c *= scale);
    buf
}

/// Forward transform of two real fields through one complex FFT.
pub fn forward_real_pair(
    grid: &Grid,
    f: &[f64],
    g: &[f64],
) -> (Vec<Complex64>, Vec<Complex64>) {
    debug_assert_eq!(f.len(), grid.len());
    debug_assert_eq!(g.len(), grid.len());
    let n = grid.n();
    let pre = grid.dx().powi(3);
    let mut buf: Vec<Complex64> = f
        .par_iter()
        .zip(g.par_iter())
        .map(|(&a, &b)| Complex64::new(a * pre, b * pre))
        .collect();
    fft3(&mut buf, n, false);
    // f_hat(m) = (F(m) + conj(F(-m)))/2, g_hat(m) = (F(m) - conj(F(-m)))/(2i).
    let mut gh = vec![Complex64::default(); buf.len()];
    with_pooled_buffer(buf.len(), |refl| {
        {
            let src = &buf;
            refl.par_chunks_mut(n * n)
                .enumerate()
                .for_each(|(i, out_plane)| {
                    let ri = if i == 0 { 0 } else { n - i };
                    for j in 0..n {
                        let rj = if j == 0 { 0 } else { n - j };
                        for k in 0..n {
                            let rk = if k == 0 { 0 } else { n - k };
                            out_plane[j * n + k] = src[(ri * n + rj) * n + rk];
                        }
                    }
                });
        }
        buf.par_chunks_mut(n * n)
            .zip(refl.par_chunks(n * n))
            .zip(gh.par_chunks_mut(n * n))
            .for_each(|((bc, rc), gc)| {
                for idx in 0..bc.len() {
                    let a = bc[idx];
                    let b = rc[idx].conj();
                    bc[idx] = Complex64::new(0.5 * (a.re + b.re), 0.5 * (a.im + b.im));
                    gc[idx] = Complex64::new(0.5 * (a.im - b.im), -0.5 * (a.re - b.re));
                }
            });
    });
    (buf, gh)
}

/// Inverse transform of two Hermitian spectra to real fields through one
/// complex FFT.
pub fn inverse_real_pair(
    grid: &Grid,
    a: &[Complex64],
    b: &[Complex64],
) -> (Vec<f64>, Vec<f64>) {
    debug_assert_eq!(a.len(), grid.len());
    debug_assert_eq!(b.len(), grid.len());
    let n = grid.n();
    let mut buf = vec![Complex64::default(); a.len()];
    buf.par_chunks_mut(n * n)
        .zip(a.par_chunks(n * n))
        .zip(b.par_chunks(n * n))
        .for_each(|((out, ac), bc)| {
            for idx in 0..out.len() {
                let (x, y) = (ac[idx], bc[idx]);
                out[idx] = Complex64::new(x.re - y.im, x.im + y.re); // x + i*y
            }
        });
    fft3(&mut buf, n, true);
    let scale = grid.box_length().powi(-3);
    let mut fa = vec![0.0f64; buf.len()];
    let mut fb = vec![0.0f64; buf.len()];
    fa.par_chunks_mut(n * n)
        .zip(fb.par_chunks_mut(n * n))
        .zip(buf.par_chunks(n * n))
        .for_each(|((fac, fbc), src)| {
            for idx in 0..fac.len() {
                fac[idx] = src[idx].re * scale;
                fbc[idx] = src[idx].im * scale;
            }
        });
    (fa, fb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::make_grid;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    use std::f64::consts::PI;

    fn rand_phys(grid: &Grid, seed: u64) -> Vec<f64> {
        let mut rng = StdRng::seed_from_u64(seed);
        (0..grid.len()).map(|_| rng.gen_range(-1.0..1.0)).collect()
    }

    /// Direct triple-sum DFT, the oracle for the fast path.
    fn direct_forward(grid: &Grid, phys: &[f64]) -> Vec<Complex64> {
        let n = grid.n();
        let dx = grid.dx();
        let mut out = vec![Complex64::default(); grid.len()];
        for mi in 0..n {
            for mj in 0..n {
                for mk in 0..n {
                    let mut acc = Complex64::default();
                    for xi in 0..n {
                        for xj in 0..n {
                            for xk in 0..n {
                                let phase = -2.0 * PI / n as f64
                                    * (grid.wavenumber(mi) as f64 * xi as f64
                                        + grid.wavenumber(mj) as f64 * xj as f64
                                        + grid.wavenumber(mk) as f64 * xk as f64);
                                acc += phys[grid.index(xi, xj, xk)]
                                    * Complex64::new(phase.cos(), phase.sin());
                            }
                        }
                    }
                    out[grid.index(mi, mj, mk)] = acc * dx.powi(3);
                }
            }
        }
        out
    }

    #[test]
    fn matches_direct_dft_on_8cubed() {
        let grid = make_grid(8, 2.0 * PI).unwrap();
        let phys = rand_phys(&grid, 1);
        let fast = forward_real(&grid, &phys);
        let slow = direct_forward(&grid, &phys);
        let scale: f64 = slow.iter().map(|c| c.norm()).fold(0.0, f64::max);
        for (a, b) in fast.iter().zip(slow.iter()) {
            assert!((a - b).norm() <= 1e-12 * scale);
        }
    }

    #[test]
    fn round_trip_is_identity() {
        let grid = make_grid(16, 5.0).unwrap();
        let phys = rand_phys(&grid, 2);
        let coeffs = forward_real(&grid, &phys);
        let back = inverse_real(&grid, &coeffs);
        let scale: f64 = phys.iter().map(|x| x.abs()).fold(0.0, f64::max);
        for (a, b) in phys.iter().zip(back.iter()) {
            assert!((a - b).abs() <= 1e-12 * scale);
        }
    }

    #[test]
    fn pair_paths_match_single_paths() {
        let grid = make_grid(16, 2.0 * PI).unwrap();
        let f = rand_phys(&grid, 3);
        let g = rand_phys(&grid, 4);
        let (fh, gh) = forward_real_pair(&grid, &f, &g);
        let fh1 = forward_real(&grid, &f);
        let gh1 = forward_real(&grid, &g);
        let scale: f64 = fh1.iter().chain(gh1.iter()).map(|c| c.norm()).fold(0.0, f64::max);
        for (a, b) in fh.iter().zip(fh1.iter()) {
            assert!((a - b).norm() <= 1e-13 * scale);
        }
        for (a, b) in gh.iter().zip(gh1.iter()) {
            assert!((a - b).norm() <= 1e-13 * scale);
        }
        let (fr, gr) = inverse_real_pair(&grid, &fh1, &gh1);
        for (a, b) in fr.iter().zip(f.iter()) {
            assert!((a - b).abs() <= 1e-12);
        }
        for (a, b) in gr.iter().zip(g.iter()) {
            assert!((a - b).abs() <= 1e-12);
        }
    }
}
