//! Seeded random stream.
//!
//! Every run owns exactly one [`RngStream`]. The generator is ChaCha8 seeded
//! through `SeedableRng::seed_from_u64`, which is specified independently of
//! platform and word size, so a seed replays the same draws everywhere.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone)]
pub struct RngStream {
    seed: u64,
    inner: ChaCha8Rng,
}

impl RngStream {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Uniform draw in `[0, 1)`.
    pub fn unit(&mut self) -> f64 {
        self.inner.random::<f64>()
    }

    /// Uniform draw in `[low, high)`.
    pub fn uniform_real(&mut self, low: f64, high: f64) -> f64 {
        debug_assert!(low <= high);
        // always consume one draw so the stream stays aligned for low == high
        let u = self.unit();
        if low == high {
            return low;
        }
        let x = low + u * (high - low);
        // a + u(b - a) can round up to b for u just below 1
        if x < high {
            x
        } else {
            high.next_down().max(low)
        }
    }

    /// Uniform draw in `{0, ..., n - 1}`. Panics when `n == 0`.
    pub fn uniform_int(&mut self, n: usize) -> usize {
        self.inner.random_range(0..n)
    }

    /// Uniform index in `0..n` that avoids the (at most two, distinct)
    /// entries of `exclude`.
    pub fn index_excluding(&mut self, n: usize, exclude: &[usize]) -> usize {
        assert!(exclude.len() <= 2, "at most two excluded indices");
        debug_assert!(exclude.iter().all(|&e| e < n));
        debug_assert!(n > exclude.len());
        let mut sorted = [usize::MAX; 2];
        sorted[..exclude.len()].copy_from_slice(exclude);
        sorted.sort_unstable();
        let mut pick = self.uniform_int(n - exclude.len());
        for e in sorted {
            if pick >= e {
                pick += 1;
            }
        }
        pick
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_draws() {
        let mut a = RngStream::new(7);
        let mut b = RngStream::new(7);
        for _ in 0..1000 {
            assert_eq!(a.unit().to_bits(), b.unit().to_bits());
            assert_eq!(a.uniform_int(13), b.uniform_int(13));
        }
    }

    #[test]
    fn different_seeds_diverge() {
        let mut a = RngStream::new(1);
        let mut b = RngStream::new(2);
        let same = (0..64).filter(|_| a.unit() == b.unit()).count();
        assert!(same < 2);
    }

    #[test]
    fn ranges_hold() {
        let mut rng = RngStream::new(3);
        for _ in 0..10_000 {
            let x = rng.uniform_real(-1.0, 1.0);
            assert!((-1.0..1.0).contains(&x));
            assert!(rng.uniform_int(5) < 5);
        }
        assert_eq!(rng.uniform_real(2.0, 2.0), 2.0);
    }

    #[test]
    fn excluded_indices_never_drawn() {
        let mut rng = RngStream::new(11);
        let mut seen = [0usize; 6];
        for _ in 0..6000 {
            let k = rng.index_excluding(6, &[4, 1]);
            assert!(k != 4 && k != 1);
            seen[k] += 1;
        }
        for k in [0, 2, 3, 5] {
            assert!(seen[k] > 1200, "index {k} drawn {} times", seen[k]);
        }
    }
}
