//! OEIS b-files and prefix comparison.

use std::fmt;
use std::path::Path;

use num_bigint::BigInt;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("b-file line {line}: {message}")]
pub struct BFileError {
    /// 1-based.
    pub line: usize,
    pub message: String,
}

/// `(index, value)` pairs with strictly increasing indices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BFile {
    pub entries: Vec<(i64, BigInt)>,
}

impl BFile {
    /// One `n value` pair per line; blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self, BFileError> {
        let mut entries: Vec<(i64, BigInt)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| BFileError {
                line: i + 1,
                message,
            };
            let mut fields = line.split_whitespace();
            let (Some(n), Some(v), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(err(format!("expected \"index value\", found {line:?}")));
            };
            let n: i64 = n.parse().map_err(|_| err(format!("bad index {n:?}")))?;
            let v: BigInt = v.parse().map_err(|_| err(format!("bad value {v:?}")))?;
            if let Some(&(prev, _)) = entries.last() {
                if n <= prev {
                    return Err(err(format!(
                        "index {n} does not increase (previous {prev})"
                    )));
                }
            }
            entries.push((n, v));
        }
        Ok(BFile { entries })
    }

    pub fn read(path: &Path) -> Result<Self, crate::CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| crate::CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        Ok(Self::parse(&text)?)
    }

    pub fn values(&self) -> impl Iterator<Item = &BigInt> {
        self.entries.iter().map(|(_, v)| v)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    /// Position in the compared sequence.
    pub position: usize,
    /// The b-file index at that position.
    pub index: i64,
    pub expected: BigInt,
    pub found: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompareReport {
    /// Length of the longest common prefix.
    pub matched: usize,
    pub mismatch: Option<Mismatch>,
    pub min_match: usize,
}

impl CompareReport {
    /// No disagreement anywhere in the overlap, and at least `min_match`
    /// (and at least one) terms agree.
    pub fn passed(&self) -> bool {
        self.mismatch.is_none() && self.matched >= self.min_match.max(1)
    }
}

impl fmt::Display for CompareReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: matched {} term(s), required {}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.matched,
            self.min_match.max(1)
        )?;
        if let Some(m) = &self.mismatch {
            write!(
                f,
                "; first mismatch at position {} (b-file index {}): expected {}, found {}",
                m.position, m.index, m.expected, m.found
            )?;
        }
        Ok(())
    }
}

/// Compare `seq` against the b-file from its first entry on.
pub fn oeis_compare(seq: &[BigInt], bfile: &BFile, min_match: usize) -> CompareReport {
    let mut matched = 0;
    let mut mismatch = None;
    for (position, (found, (index, expected))) in seq.iter().zip(&bfile.entries).enumerate() {
        if found != expected {
            mismatch = Some(Mismatch {
                position,
                index: *index,
                expected: expected.clone(),
                found: found.clone(),
            });
            break;
        }
        matched += 1;
    }
    CompareReport {
        matched,
        mismatch,
        min_match,
    }
}
