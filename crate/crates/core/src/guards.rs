//! Size limits for the exponential searches.
//!
//! Every exact solver in the crate refuses instances above its guard with
//! [`Error::Capacity`](crate::Error::Capacity). The defaults keep desk-scale
//! runs fast; the environment variable [`GUARD_ENV`] raises (or lowers) all
//! guards at once.

/// Name of the environment variable that overrides every guard with one
/// integer vertex count.
pub const GUARD_ENV: &str = "TWINKERNEL_GUARD";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guards {
    /// Largest graph accepted by the H-coloring search.
    pub h_coloring: usize,
    /// Largest instance accepted by the list 3-coloring search.
    pub list_coloring: usize,
    /// Largest graph accepted by the exact minimum twin-cover search.
    pub twin_cover: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            h_coloring: 20,
            list_coloring: 24,
            twin_cover: 30,
        }
    }
}

impl Guards {
    /// Every guard set to `limit`.
    pub fn uniform(limit: usize) -> Self {
        Guards {
            h_coloring: limit,
            list_coloring: limit,
            twin_cover: limit,
        }
    }

    /// No practical limit; used by test suites that size their inputs
    /// deliberately.
    pub fn unlimited() -> Self {
        Self::uniform(usize::MAX)
    }

    /// Defaults, overridden by [`GUARD_ENV`] when it holds an integer.
    pub fn from_env() -> Self {
        match std::env::var(GUARD_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            Some(limit) => Self::uniform(limit),
            None => Self::default(),
        }
    }
}
