use spdl::grid::make_grid;
use spdl::fft;
use std::time::Instant;

fn main() {
    let grid = make_grid(64, 64.0 * std::f64::consts::PI).unwrap();
    let phys: Vec<f64> = (0..grid.len()).map(|i| (i as f64 * 0.37).sin()).collect();
    let g2: Vec<f64> = (0..grid.len()).map(|i| (i as f64 * 0.11).cos()).collect();
    let c = fft::forward_real(&grid, &phys);
    let d = fft::forward_real(&grid, &g2);
    let iters = 60;
    let mut acc = 0.0;
    let t0 = Instant::now();
    for _ in 0..iters { let c2 = fft::forward_real(&grid, &phys); acc += c2[1].re; }
    let fwd = t0.elapsed().as_secs_f64() / iters as f64;
    let t1 = Instant::now();
    for _ in 0..iters { let p = fft::inverse_real(&grid, &c); acc += p[1]; }
    let inv = t1.elapsed().as_secs_f64() / iters as f64;
    let t2 = Instant::now();
    for _ in 0..iters { let (a,b) = fft::forward_real_pair(&grid, &phys, &g2); acc += a[1].re + b[1].im; }
    let pair = t2.elapsed().as_secs_f64() / iters as f64;
    let t3 = Instant::now();
    for _ in 0..iters { let (a,b) = fft::inverse_real_pair(&grid, &c, &d); acc += a[1] + b[1]; }
    let ipair = t3.elapsed().as_secs_f64() / iters as f64;
    println!("64^3 fwd {:.2} | inv {:.2} | fwd_pair {:.2} | inv_pair {:.2} ms (sink {acc:e})", fwd*1e3, inv*1e3, pair*1e3, ipair*1e3);
}
