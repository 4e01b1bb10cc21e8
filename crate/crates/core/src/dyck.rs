//! Dyck paths: balanced up/down step sequences that never dip below the
//! ground line.

use crate::error::{Error, Result};

/// Cap on the half-length for path enumeration. `n = 12` already lists
/// 208012 paths.
pub const DEFAULT_ENUMERATION_CAP: usize = 12;

/// One lattice step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Up,
    Down,
}

/// A Dyck path of length `2n`: every prefix has at least as many upsteps as
/// downsteps and the totals agree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height: i64 = 0;
        for step in &steps {
            height += match step {
                Step::Up => 1,
                Step::Down => -1,
            };
            if height < 0 {
                return Err(Error::InvalidDyckPath("path dips below the ground".into()));
            }
        }
        if height != 0 {
            return Err(Error::InvalidDyckPath(
                "path does not return to height 0".into(),
            ));
        }
        Ok(Self { steps })
    }

    /// Parse from a string of `U`/`D` characters, e.g. `"UUDD"`.
    pub fn parse(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .map(|c| match c {
                'U' => Ok(Step::Up),
                'D' => Ok(Step::Down),
                other => Err(Error::InvalidDyckPath(format!("unknown step {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Half-length `n` of the path.
    pub fn half_length(&self) -> usize {
        self.steps.len() / 2
    }

    /// Vertex heights `(h_0, ..., h_{2n})`, starting and ending at 0.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = 0usize;
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(0);
        for step in &self.steps {
            match step {
                Step::Up => h += 1,
                Step::Down => h -= 1,
            }
            out.push(h);
        }
        out
    }

    pub fn max_height(&self) -> usize {
        self.heights().into_iter().max().unwrap_or(0)
    }

    /// Step string, e.g. `"UDUD"`.
    pub fn step_string(&self) -> String {
        self.steps
            .iter()
            .map(|s| match s {
                Step::Up => 'U',
                Step::Down => 'D',
            })
            .collect()
    }
}

/// All Dyck paths of length `2n`, each exactly once, upstep-first
/// lexicographic order.
pub fn enumerate_dyck(n: usize) -> Result<Vec<DyckPath>> {
    enumerate_dyck_with_cap(n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_dyck_with_cap(n: usize, cap: usize) -> Result<Vec<DyckPath>> {
    if n > cap {
        return Err(Error::CapExceeded {
            what: "dyck path half-length",
            requested: n,
            cap,
        });
    }
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(2 * n);
    extend(n, 0, 0, &mut steps, &mut out);
    Ok(out)
}

fn extend(n: usize, ups: usize, downs: usize, steps: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
    if steps.len() == 2 * n {
        out.push(DyckPath {
            steps: steps.clone(),
        });
        return;
    }
    if ups < n {
        steps.push(Step::Up);
        extend(n, ups + 1, downs, steps, out);
        steps.pop();
    }
    if downs < ups {
        steps.push(Step::Down);
        extend(n, ups, downs + 1, steps, out);
        steps.pop();
    }
}
