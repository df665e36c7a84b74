//! Plain-text COO exchange format and generator names.
//!
//! The first line holds `dim nnz`; each following line is `row col re im`
//! with 1-based indices.

use std::io::{BufRead, Write};

use crate::algebra::{cartan_generator, root_generator, GeneratorSet, Root, Sign};
use crate::error::{Error, Result};
use crate::fock::FockBasis;
use crate::sparse::{SparseOperator, C64};

pub fn write_coo<W: Write>(op: &SparseOperator, mut w: W) -> Result<()> {
    let t = op.triplets();
    writeln!(w, "{} {}", op.dim(), t.len())?;
    for (r, c, v) in t {
        writeln!(w, "{} {} {:.16e} {:.16e}", r + 1, c + 1, v.re, v.im)?;
    }
    Ok(())
}

fn parse_err(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse { line, reason: reason.into() }
}

pub fn read_coo<R: BufRead>(r: R) -> Result<SparseOperator> {
    let mut lines = r.lines().enumerate().filter_map(|(i, l)| match l {
        Ok(s) if s.trim().is_empty() => None,
        other => Some((i + 1, other)),
    });
    let (n0, head) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let head = head?;
    let nums: Vec<usize> = head
        .split_whitespace()
        .map(|x| x.parse().map_err(|_| parse_err(n0, format!("bad header field `{x}`"))))
        .collect::<Result<_>>()?;
    let [dim, nnz] = nums[..] else {
        return Err(parse_err(n0, "header must be `dim nnz`"));
    };
    let mut trip = Vec::with_capacity(nnz);
    for (n, l) in lines {
        let l = l?;
        let f: Vec<&str> = l.split_whitespace().collect();
        if f.len() != 4 {
            return Err(parse_err(n, "expected `row col re im`"));
        }
        let idx = |s: &str| -> Result<usize> {
            let i: usize = s.parse().map_err(|_| parse_err(n, format!("bad index `{s}`")))?;
            if i == 0 || i > dim {
                return Err(parse_err(n, format!("index {i} outside 1..={dim}")));
            }
            Ok(i - 1)
        };
        let val = |s: &str| -> Result<f64> { s.parse().map_err(|_| parse_err(n, format!("bad value `{s}`"))) };
        trip.push((idx(f[0])?, idx(f[1])?, C64::new(val(f[2])?, val(f[3])?)));
    }
    if trip.len() != nnz {
        return Err(parse_err(0, format!("header announces {nnz} entries, found {}", trip.len())));
    }
    Ok(SparseOperator::from_triplets(dim, trip))
}

/// Operator names understood by [`resolve_generator`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorId {
    Raise(usize),
    Lower(usize),
    Cartan(usize),
    Root { root: Root, mode: i32 },
    LoopCartan { a: usize, mode: i32 },
}

impl GeneratorId {
    /// `E+:1`, `E-:0`, `H:2`, `CW:eps1-delta1:m=1`, `CWH:1:m=-1`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::UnknownGenerator(s.to_string());
        let parts: Vec<&str> = s.split(':').collect();
        let node = |x: &str| x.parse::<usize>().map_err(|_| bad());
        let mode = |x: &str| x.strip_prefix("m=").and_then(|v| v.parse::<i32>().ok()).ok_or_else(bad);
        match parts[..] {
            ["E+", a] => Ok(GeneratorId::Raise(node(a)?)),
            ["E-", a] => Ok(GeneratorId::Lower(node(a)?)),
            ["H", a] => Ok(GeneratorId::Cartan(node(a)?)),
            ["CW", r, m] => Ok(GeneratorId::Root { root: Root::parse(r).ok_or_else(bad)?, mode: mode(m)? }),
            ["CWH", a, m] => Ok(GeneratorId::LoopCartan { a: node(a)?, mode: mode(m)? }),
            _ => Err(bad()),
        }
    }
}

/// Builds the named operator. Chevalley names are taken from `set`.
pub fn resolve_generator(id: &GeneratorId, basis: &FockBasis, set: &GeneratorSet) -> Result<SparseOperator> {
    let nodes = set.cartan.nodes();
    let check = |a: usize| {
        if a < nodes {
            Ok(a)
        } else {
            Err(Error::UnknownGenerator(format!("node {a} out of range 0..{nodes}")))
        }
    };
    match *id {
        GeneratorId::Raise(a) => Ok(set.e(check(a)?, Sign::Plus).clone()),
        GeneratorId::Lower(a) => Ok(set.e(check(a)?, Sign::Minus).clone()),
        GeneratorId::Cartan(a) => Ok(set.h[check(a)?].clone()),
        GeneratorId::Root { root, mode } => {
            let c = &set.cartan;
            if !Root::all(c.fermion_flavors, c.boson_flavors).contains(&root) {
                return Err(Error::UnknownGenerator(format!("{root} is not a root here")));
            }
            root_generator(basis, &root, mode)
        }
        GeneratorId::LoopCartan { a, mode } => {
            if a == 0 || a >= nodes {
                return Err(Error::UnknownGenerator(format!("cartan index {a} out of range 1..{nodes}")));
            }
            cartan_generator(basis, &set.cartan, a, mode)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::deformed_generators;
    use crate::fock::LatticeConfig;

    #[test]
    fn coo_round_trip() {
        let basis = FockBasis::new(&LatticeConfig::new(2, 1, 2)).unwrap();
        let set = deformed_generators(&basis).unwrap();
        let mut buf = Vec::new();
        write_coo(&set.e_plus[0], &mut buf).unwrap();
        let back = read_coo(&buf[..]).unwrap();
        assert!(back.max_abs_diff(&set.e_plus[0]) < 1e-15);
    }

    #[test]
    fn parse_errors_carry_line() {
        let err = read_coo("2 1\n1 3 1.0 0.0\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn generator_names() {
        assert_eq!(GeneratorId::parse("E+:1").unwrap(), GeneratorId::Raise(1));
        assert_eq!(GeneratorId::parse("CWH:2:m=-1").unwrap(), GeneratorId::LoopCartan { a: 2, mode: -1 });
        assert!(GeneratorId::parse("CW:eps1-delta1:m=1").is_ok());
        assert!(GeneratorId::parse("F:1").is_err());
    }
}
