//! Seeded random input generation and wall-clock measurement for the
//! CLI `bench` subcommand and the scaling tests.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::depth::{analyze_depth, ConnectivityConvention};
use crate::diamonds::compute_diamond_top_table;
use crate::empty_rect::max_empty_rectangle;
use crate::grid::{BinaryGrid, PointSet, RealGrid};
use crate::perimeter::max_perimeter_rectangle;
use crate::squares::{compute_cb_table, compute_im_table, compute_sq_table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BenchAlgo {
    Square,
    Diamond,
    Depth,
    EmptyRect,
    Perimeter,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct BenchReport {
    pub algo: BenchAlgo,
    /// Grid side length, or point count for empty-rect.
    pub size: usize,
    pub seed: u64,
    pub seconds: f64,
    /// A value derived from the output, so the work cannot be
    /// optimized away and runs are comparable.
    pub digest: u64,
}

pub fn random_binary_grid(size: usize, seed: u64) -> BinaryGrid {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cells: Vec<u8> = (0..size * size).map(|_| rng.gen_range(0..=1)).collect();
    BinaryGrid::new(size, size, cells)
}

pub fn random_real_grid(size: usize, seed: u64) -> RealGrid {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cells: Vec<f64> = (0..size * size).map(|_| rng.gen_range(-10.0..10.0)).collect();
    RealGrid::new(size, size, cells)
}

pub fn random_point_set(count: usize, seed: u64) -> PointSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (xmax, ymax) = (1000.0, 1000.0);
    let points: Vec<(f64, f64)> = (0..count)
        .map(|_| (rng.gen_range(0.0..=xmax), rng.gen_range(0.0..=ymax)))
        .collect();
    PointSet::new(xmax, ymax, points)
}

/// Runs one algorithm on a seeded random input of the given size and
/// reports the elapsed wall-clock time.
pub fn run_bench(algo: BenchAlgo, size: usize, seed: u64) -> BenchReport {
    let (seconds, digest) = match algo {
        BenchAlgo::Square => {
            let g = random_binary_grid(size, seed);
            let start = Instant::now();
            let sq = compute_sq_table(&g);
            let cb = compute_cb_table(&g);
            let im = compute_im_table(&g);
            let secs = start.elapsed().as_secs_f64();
            let digest =
                sq.max_cell().1 as u64 + cb.max_cell().1 as u64 * 1000 + im.max_cell().1 as u64 * 1_000_000;
            (secs, digest)
        }
        BenchAlgo::Diamond => {
            let g = random_binary_grid(size, seed);
            let start = Instant::now();
            let t = compute_diamond_top_table(&g);
            (start.elapsed().as_secs_f64(), t.max_cell().1 as u64)
        }
        BenchAlgo::Depth => {
            let g = random_binary_grid(size, seed);
            let start = Instant::now();
            let res = analyze_depth(&g, ConnectivityConvention::standard());
            (start.elapsed().as_secs_f64(), res.components.len() as u64)
        }
        BenchAlgo::EmptyRect => {
            let ps = random_point_set(size, seed);
            let start = Instant::now();
            let r = max_empty_rectangle(&ps);
            (start.elapsed().as_secs_f64(), r.area.to_bits())
        }
        BenchAlgo::Perimeter => {
            let b = random_real_grid(size, seed);
            let start = Instant::now();
            let r = max_perimeter_rectangle(&b).unwrap();
            (start.elapsed().as_secs_f64(), r.value.to_bits())
        }
    };
    BenchReport {
        algo,
        size,
        seed,
        seconds,
        digest,
    }
}
