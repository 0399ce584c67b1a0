//! Line-oriented interleaver files.
//!
//! ```text
//! qc <n1> <n2>
//! <σ(0)> <σ(1)> … <σ(n2-1)>
//! <X_0> <X_1> … <X_{n2-1}>
//! ```
//!
//! or, for an arbitrary permutation,
//!
//! ```text
//! table <N>
//! <π(0)> <π(1)> … <π(N-1)>
//! ```
//!
//! Integers are separated by single spaces and every line ends with `\n`.

use std::fmt;
use std::str::FromStr;

use super::{Permutation, QcSpec};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InterleaverFile {
    Qc(QcSpec),
    Table(Permutation),
}

impl InterleaverFile {
    pub fn permutation(&self) -> Permutation {
        match self {
            InterleaverFile::Qc(spec) => spec.build(),
            InterleaverFile::Table(p) => p.clone(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            InterleaverFile::Qc(_) => "qc",
            InterleaverFile::Table(_) => "table",
        }
    }

    /// Integers stored in the body of the file.
    pub fn storage_integers(&self) -> usize {
        match self {
            InterleaverFile::Qc(spec) => spec.storage_integers(),
            InterleaverFile::Table(p) => p.len(),
        }
    }

    /// Header line without the trailing newline, e.g. `qc 20 20`.
    pub fn header(&self) -> String {
        match self {
            InterleaverFile::Qc(s) => format!("qc {} {}", s.n1(), s.n2()),
            InterleaverFile::Table(p) => format!("table {}", p.len()),
        }
    }
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for InterleaverFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.header())?;
        match self {
            InterleaverFile::Qc(s) => {
                writeln!(f, "{}", join(s.sigma()))?;
                writeln!(f, "{}", join(s.shifts()))
            }
            InterleaverFile::Table(p) => writeln!(f, "{}", join(p.table())),
        }
    }
}

fn parse_ints(line: &str, lineno: usize, expected: usize) -> Result<Vec<usize>> {
    let values = line
        .split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|e| Error::Parse {
                line: lineno,
                reason: format!("{tok:?}: {e}"),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    if values.len() != expected {
        return Err(Error::Parse {
            line: lineno,
            reason: format!("expected {expected} integers, found {}", values.len()),
        });
    }
    Ok(values)
}

impl FromStr for InterleaverFile {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let lines: Vec<&str> = text.trim_end().lines().collect();
        let header: Vec<&str> = lines
            .first()
            .map(|l| l.split_whitespace().collect())
            .unwrap_or_default();
        let dim = |tok: Option<&&str>| -> Result<usize> {
            tok.and_then(|t| t.parse().ok()).ok_or_else(|| Error::Parse {
                line: 1,
                reason: format!("malformed header {:?}", lines.first().unwrap_or(&"")),
            })
        };
        let body_lines = |want: usize| -> Result<()> {
            if lines.len() != want + 1 {
                return Err(Error::Parse {
                    line: lines.len().min(want + 1),
                    reason: format!("expected {} lines, found {}", want + 1, lines.len()),
                });
            }
            Ok(())
        };
        match header.first().copied() {
            Some("qc") if header.len() == 3 => {
                let n1 = dim(header.get(1))?;
                let n2 = dim(header.get(2))?;
                body_lines(2)?;
                let sigma = parse_ints(lines[1], 2, n2)?;
                let shifts = parse_ints(lines[2], 3, n2)?;
                Ok(InterleaverFile::Qc(QcSpec::new(n1, n2, sigma, shifts)?))
            }
            Some("table") if header.len() == 2 => {
                let n = dim(header.get(1))?;
                body_lines(1)?;
                let table = parse_ints(lines[1], 2, n)?;
                Ok(InterleaverFile::Table(Permutation::from_table(table)?))
            }
            _ => Err(Error::Parse {
                line: 1,
                reason: "header must be `qc <n1> <n2>` or `table <N>`".into(),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutation::sample_qc;
    use proptest::prelude::*;

    #[test]
    fn qc_layout_is_exact() {
        let spec = QcSpec::new(5, 5, vec![3, 2, 0, 4, 1], vec![0, 2, 1, 3, 4]).unwrap();
        let text = InterleaverFile::Qc(spec).to_string();
        assert_eq!(text, "qc 5 5\n3 2 0 4 1\n0 2 1 3 4\n");
    }

    #[test]
    fn table_layout_is_exact() {
        let text = InterleaverFile::Table(Permutation::identity(4)).to_string();
        assert_eq!(text, "table 4\n0 1 2 3\n");
        let back: InterleaverFile = text.parse().unwrap();
        assert_eq!(back.permutation(), Permutation::identity(4));
    }

    #[test]
    fn rejects_malformed_files() {
        for bad in [
            "",
            "qc 5\n0\n0\n",
            "qc 2 2\n0 1\n",
            "qc 2 2\n0 1\n0 2\n",
            "qc 2 2\n0 0\n0 1\n",
            "table 3\n0 1\n",
            "table 3\n0 1 x\n",
            "tabel 3\n0 1 2\n",
            "table 2\n0 1\n0 1\n",
        ] {
            assert!(bad.parse::<InterleaverFile>().is_err(), "{bad:?}");
        }
    }

    proptest! {
        #[test]
        fn qc_text_roundtrip(n1 in 1usize..30, n2 in 1usize..30, seed: u64) {
            let spec = sample_qc(n1, n2, seed).unwrap();
            let file = InterleaverFile::Qc(spec);
            let text = file.to_string();
            prop_assert_eq!(text.lines().nth(1).unwrap().split(' ').count(), n2);
            prop_assert_eq!(file.storage_integers(), 2 * n2);
            prop_assert_eq!(text.parse::<InterleaverFile>().unwrap(), file);
        }
    }
}
