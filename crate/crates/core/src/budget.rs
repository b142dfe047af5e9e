//! Resource guards shared by the search routines.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Limits for a single search. `None` means unlimited.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_duration: Option<Duration>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget {
        max_nodes: None,
        max_duration: None,
    };

    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes: Some(max_nodes),
            max_duration: None,
        }
    }

    pub fn meter(&self) -> Meter {
        Meter {
            budget: *self,
            nodes: 0,
            start: Instant::now(),
        }
    }
}

/// Counts search nodes against a [`Budget`].
#[derive(Clone, Debug)]
pub struct Meter {
    budget: Budget,
    nodes: u64,
    start: Instant,
}

impl Meter {
    pub fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if let Some(max) = self.budget.max_nodes {
            if self.nodes > max {
                return Err(Error::BudgetExceeded(format!("more than {max} search nodes")));
            }
        }
        // Checking the clock on every node is measurable; every 256 is plenty.
        if self.nodes & 0xff == 0 {
            self.check_time()?;
        }
        Ok(())
    }

    pub fn check_time(&self) -> Result<()> {
        if let Some(limit) = self.budget.max_duration {
            if self.start.elapsed() > limit {
                return Err(Error::BudgetExceeded(format!(
                    "more than {} ms elapsed",
                    limit.as_millis()
                )));
            }
        }
        Ok(())
    }

    pub fn nodes_used(&self) -> u64 {
        self.nodes
    }

    pub fn elapsed(&self) -> Duration {
        self.start.elapsed()
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn node_limit_trips() {
        let mut m = Budget::nodes(2).meter();
        assert!(m.tick().is_ok());
        assert!(m.tick().is_ok());
        assert!(matches!(m.tick(), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn unlimited_never_trips() {
        let mut m = Budget::UNLIMITED.meter();
        for _ in 0..10_000 {
            m.tick().unwrap();
        }
        assert_eq!(m.nodes_used(), 10_000);
    }
}
