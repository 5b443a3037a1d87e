//! Property suites that cross-check the library against independent oracles
//! and known identities. Every suite is deterministic given its seed.

pub mod expansion;
pub mod insertion;
pub mod leftkey;
pub mod sample;
pub mod setops;

use std::fmt;
use std::str::FromStr;

/// Result of one named property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub name: String,
    pub passed: bool,
    /// Number of non-vacuous instances checked.
    pub checked: u64,
    /// First counterexample, or a short summary when passing.
    pub detail: String,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} ({} checked){}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.checked,
            if self.detail.is_empty() {
                String::new()
            } else {
                format!(": {}", self.detail)
            }
        )
    }
}

/// Counts checked instances and keeps the first failure.
#[derive(Clone, Debug, Default)]
pub struct Tally {
    pub checked: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
    pub note: String,
}

impl Tally {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records one instance; `describe` is only called on failure.
    pub fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    /// Records a failure that is not tied to an instance count.
    pub fn fail(&mut self, reason: impl Into<String>) {
        self.failures += 1;
        if self.first_failure.is_none() {
            self.first_failure = Some(reason.into());
        }
    }

    pub fn merge(&mut self, other: Tally) {
        self.checked += other.checked;
        self.failures += other.failures;
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
    }

    pub fn outcome(self, name: impl Into<String>) -> Outcome {
        let passed = self.failures == 0;
        let detail = match self.first_failure {
            Some(f) => format!("{} failure(s); first: {f}", self.failures),
            None => self.note,
        };
        Outcome {
            name: name.into(),
            passed,
            checked: self.checked,
            detail,
        }
    }
}

/// The property suites exposed by the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Setops,
    Leftkey,
    Insertion,
    Expansion,
    All,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "setops" => Ok(Suite::Setops),
            "leftkey" => Ok(Suite::Leftkey),
            "insertion" => Ok(Suite::Insertion),
            "expansion" => Ok(Suite::Expansion),
            "all" => Ok(Suite::All),
            other => Err(format!(
                "unknown suite '{other}' (expected setops, leftkey, insertion, expansion or all)"
            )),
        }
    }
}

/// Runs a suite. `trials` is the number of random instances per randomized
/// property; exhaustive sweeps and fixed examples always run.
pub fn run_suite(suite: Suite, seed: u64, trials: u64) -> Vec<Outcome> {
    match suite {
        Suite::Setops => setops::run(seed, trials),
        Suite::Leftkey => leftkey::run(seed, trials),
        Suite::Insertion => insertion::run(seed, trials),
        Suite::Expansion => expansion::run(seed, trials),
        Suite::All => {
            let mut out = setops::run(seed, trials);
            out.extend(leftkey::run(seed, trials));
            out.extend(insertion::run(seed, trials));
            out.extend(expansion::run(seed, trials));
            out
        }
    }
}
