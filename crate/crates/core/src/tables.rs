//! The two published square interleavers, shipped verbatim in `data/`.

use crate::permutation::{InterleaverFile, QcSpec};

pub const QC400_TEXT: &str = include_str!("../../../data/qc400.txt");
pub const QC1600_TEXT: &str = include_str!("../../../data/qc1600.txt");

fn load(text: &str) -> QcSpec {
    match text.parse::<InterleaverFile>() {
        Ok(InterleaverFile::Qc(spec)) => spec,
        other => panic!("shipped interleaver is not a qc file: {other:?}"),
    }
}

/// 20×20 interleaver used with RSC (13,15).
pub fn qc400() -> QcSpec {
    load(QC400_TEXT)
}

/// 40×40 interleaver used with RSC (37,21).
pub fn qc1600() -> QcSpec {
    load(QC1600_TEXT)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_tables_parse() {
        let a = qc400();
        assert_eq!((a.n1(), a.n2()), (20, 20));
        assert_eq!(&a.sigma()[..4], &[2, 10, 0, 9]);
        assert_eq!(&a.shifts()[16..], &[15, 14, 13, 16]);
        assert!(a.build().is_quasi_cyclic(20).unwrap());

        let b = qc1600();
        assert_eq!((b.n1(), b.n2()), (40, 40));
        assert_eq!(b.sigma()[20], 30);
        assert_eq!(b.shifts()[39], 7);
        assert!(b.build().is_quasi_cyclic(40).unwrap());
    }
}
