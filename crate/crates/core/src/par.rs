//! Trial-level data parallelism.
//!
//! Randomised certificates and property suites run many independent trials.
//! With the `parallel` feature they fan out over rayon; without it, or when
//! [`Execution::Sequential`] is requested, they run in order. Each trial owns
//! its RNG stream (see [`crate::random::trial_rng`]) so results do not depend
//! on scheduling.

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether this mode actually runs concurrently in the current build.
    pub fn is_concurrent(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// Evaluates `f` on `0..n`, preserving index order in the output.
pub fn map_trials<T, F>(exec: Execution, n: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if exec == Execution::Parallel {
            use rayon::prelude::*;
            return (0..n).into_par_iter().map(f).collect();
        }
    }
    let _ = exec;
    (0..n).map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_agree_and_keep_order() {
        let seq = map_trials(Execution::Sequential, 100, |i| i * i);
        let par = map_trials(Execution::Parallel, 100, |i| i * i);
        assert_eq!(seq, par);
        assert_eq!(seq[7], 49);
    }

    #[test]
    fn sequential_is_never_concurrent() {
        assert!(!Execution::Sequential.is_concurrent());
        assert_eq!(Execution::Parallel.is_concurrent(), cfg!(feature = "parallel"));
    }
}
