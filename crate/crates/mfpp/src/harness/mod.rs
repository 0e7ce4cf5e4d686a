//! Monte Carlo comparison engine and CLI plumbing.
