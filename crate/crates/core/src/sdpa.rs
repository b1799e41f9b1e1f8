//! SDPA sparse text export of an [`SdpEmbedding`], and a reader for the same layout.
//!
//! Layout written:
//!
//! ```text
//! * comment with n, m and the shift
//! m
//! 3
//! n -m -1
//! 0.0 ... 0.0 1.0          (m zeros, then 1 for the E' row)
//! matno blkno i j value    (upper triangle, nonzeros only)
//! ```
//!
//! `matno 0` is `C'`, `1..=m` are `A'ᵢ`, `m + 1` is `E'`. Entries are sorted by
//! `(matno, blkno, i, j)` and values use the shortest round-trip representation,
//! so identical inputs give byte-identical files.

use std::fmt::Write as _;

use crate::embed::SdpEmbedding;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::symmat::SymMatrix;

pub fn write_sdpa<T: Scalar>(emb: &SdpEmbedding<T>) -> String {
    let n = emb.order();
    let m = emb.count();
    let mut out = String::new();
    writeln!(
        out,
        "* specmm spectral minimax embedding: n={n} m={m} shift={:?}",
        emb.shift()
    )
    .unwrap();
    writeln!(out, "{m}").unwrap();
    writeln!(out, "3").unwrap();
    writeln!(out, "{n} -{m} -1").unwrap();
    let b: Vec<String> = (0..=m)
        .map(|i| format!("{:?}", if i == m { T::one() } else { T::zero() }))
        .collect();
    writeln!(out, "{}", b.join(" ")).unwrap();

    let blocks = [(1usize, 0usize, n, false), (2, n, m, true), (3, n + m, 1, true)];
    let mut mats: Vec<&SymMatrix<T>> = vec![emb.cprime()];
    mats.extend(emb.aprime());
    mats.push(emb.eprime());
    for (matno, mat) in mats.into_iter().enumerate() {
        for &(blkno, offset, size, diagonal) in &blocks {
            for i in 0..size {
                let cols = if diagonal { i..i + 1 } else { i..size };
                for j in cols {
                    let v = mat.get(offset + i, offset + j);
                    if v != T::zero() {
                        writeln!(out, "{matno} {blkno} {} {} {v:?}", i + 1, j + 1).unwrap();
                    }
                }
            }
        }
    }
    out
}

/// One `matno blkno i j value` line (1-based indices as written).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SdpaEntry {
    pub matno: usize,
    pub block: usize,
    pub i: usize,
    pub j: usize,
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SdpaProblem {
    pub comments: Vec<String>,
    /// Value of the first header line.
    pub m: usize,
    /// Signed block sizes; negative means a diagonal block.
    pub block_sizes: Vec<i64>,
    pub objective: Vec<f64>,
    pub entries: Vec<SdpaEntry>,
}

fn numbers(line: &str) -> impl Iterator<Item = &str> {
    line.split(|c: char| c.is_whitespace() || matches!(c, ',' | '(' | ')' | '{' | '}'))
        .filter(|s| !s.is_empty())
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Sdpa {
        line,
        message: message.into(),
    }
}

impl SdpaProblem {
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().map(|(k, l)| (k + 1, l.trim()));
        let mut comments = Vec::new();
        let mut next = || lines.by_ref().find(|(_, l)| !l.is_empty());
        let mut header = loop {
            match next() {
                Some((_, l)) if l.starts_with('*') || l.starts_with('"') => comments.push(l.to_string()),
                other => break other,
            }
        };
        let mut take = |what: &str| -> Result<(usize, String)> {
            let (k, l) = header
                .take()
                .or_else(&mut next)
                .ok_or_else(|| parse_err(0, format!("missing {what}")))?;
            Ok((k, l.to_string()))
        };

        let (k, l) = take("constraint count")?;
        let m = numbers(&l)
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| parse_err(k, "expected constraint count"))?;
        let (k, l) = take("block count")?;
        let nblocks: usize = numbers(&l)
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| parse_err(k, "expected block count"))?;
        let (k, l) = take("block sizes")?;
        let block_sizes = numbers(&l)
            .map(|s| {
                s.parse::<i64>()
                    .map_err(|_| parse_err(k, format!("bad block size {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if block_sizes.len() != nblocks {
            return Err(parse_err(
                k,
                format!("expected {nblocks} block sizes, found {}", block_sizes.len()),
            ));
        }
        let (k, l) = take("objective vector")?;
        let objective = numbers(&l)
            .map(|s| {
                s.parse::<f64>()
                    .map_err(|_| parse_err(k, format!("bad objective entry {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;

        let mut entries = Vec::new();
        while let Some((k, l)) = next() {
            let fields: Vec<&str> = numbers(l).collect();
            if fields.len() != 5 {
                return Err(parse_err(k, "expected `matno blkno i j value`"));
            }
            let idx = |s: &str| s.parse::<usize>().map_err(|_| parse_err(k, format!("bad index {s:?}")));
            let entry = SdpaEntry {
                matno: idx(fields[0])?,
                block: idx(fields[1])?,
                i: idx(fields[2])?,
                j: idx(fields[3])?,
                value: fields[4]
                    .parse()
                    .map_err(|_| parse_err(k, format!("bad value {:?}", fields[4])))?,
            };
            if entry.block == 0 || entry.block > nblocks {
                return Err(parse_err(k, format!("block {} out of range", entry.block)));
            }
            let size = block_sizes[entry.block - 1].unsigned_abs() as usize;
            if entry.i == 0 || entry.j == 0 || entry.i > size || entry.j > size {
                return Err(parse_err(k, "entry index outside its block"));
            }
            entries.push(entry);
        }
        Ok(Self {
            comments,
            m,
            block_sizes,
            objective,
            entries,
        })
    }

    /// Dense symmetric matrix number `matno`, assembled block-diagonally.
    pub fn dense_matrix(&self, matno: usize) -> SymMatrix<f64> {
        let total: usize = self.block_sizes.iter().map(|s| s.unsigned_abs() as usize).sum();
        let offsets: Vec<usize> = self
            .block_sizes
            .iter()
            .scan(0, |acc, s| {
                let o = *acc;
                *acc += s.unsigned_abs() as usize;
                Some(o)
            })
            .collect();
        let mut rows = vec![vec![0.0; total]; total];
        for e in self.entries.iter().filter(|e| e.matno == matno) {
            let o = offsets[e.block - 1];
            rows[o + e.i - 1][o + e.j - 1] = e.value;
            rows[o + e.j - 1][o + e.i - 1] = e.value;
        }
        SymMatrix::from_rows(&rows).expect("square by construction")
    }
}
