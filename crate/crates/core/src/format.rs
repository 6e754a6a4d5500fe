//! Text format for generator matrices and JSON documents for witnesses.
//!
//! Matrix files: the first line that is neither blank nor a `#` comment is
//! the header `q m n k`, followed by `k` rows of `m·n` integers. Columns
//! `(j-1)m+1 ..= jm` belong to chain `j`. Positions in errors are 1-based;
//! the column of an entry is its index within the row.

use serde::{Deserialize, Serialize};

use crate::algebra::{Elem, Field, Matrix, UpperTriangular};
use crate::error::{Error, Result};
use crate::metric::CodeSpace;
use crate::reduction::ReductionWitness;
use crate::symmetry::Isometry;

/// Version tag written into every JSON document.
pub const FORMAT_VERSION: u32 = 1;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_header(line: usize, text: &str) -> Result<(Field, usize, usize, usize)> {
    let header = |message: String| Error::Header { line, message };
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 4 {
        return Err(header(format!("expected 4 fields `q m n k`, found {}", fields.len())));
    }
    let mut nums = [0u64; 4];
    for (i, (name, tok)) in ["q", "m", "n", "k"].iter().zip(&fields).enumerate() {
        nums[i] = tok.parse().map_err(|_| header(format!("{name} = `{tok}` is not a nonnegative integer")))?;
    }
    let [q, m, n, k] = nums;
    let field = Field::new(q).map_err(|e| header(e.to_string()))?;
    if m == 0 || n == 0 {
        return Err(header("m and n must be positive".to_string()));
    }
    let size = |x: u64| usize::try_from(x).map_err(|_| header(format!("{x} is too large")));
    Ok((field, size(m)?, size(n)?, size(k)?))
}

/// Parses a matrix file into a validated matrix and its space.
pub fn parse_matrix_file(text: &str) -> Result<(Matrix, CodeSpace)> {
    let mut lines = content_lines(text);
    let Some((hline, htext)) = lines.next() else {
        return Err(Error::Header { line: 1, message: "missing header line `q m n k`".to_string() });
    };
    let (field, m, n, k) = parse_header(hline, htext)?;
    let space = CodeSpace::new(&field, m, n)?;
    let width = space.dim();
    let q = field.order();
    let mut data = Vec::with_capacity(k * width);
    let mut last_line = hline;
    for r in 0..k {
        let Some((line, body)) = lines.next() else {
            return Err(Error::Parse {
                line: last_line + 1,
                column: 1,
                message: format!("expected {k} matrix rows, found {r}"),
            });
        };
        last_line = line;
        let mut count = 0;
        for (i, tok) in body.split_whitespace().enumerate() {
            let column = i + 1;
            if column > width {
                return Err(Error::Parse { line, column, message: format!("row has more than {width} entries") });
            }
            let value: u64 = tok.parse().map_err(|_| Error::Parse {
                line,
                column,
                message: format!("`{tok}` is not a nonnegative integer"),
            })?;
            if value >= u64::from(q) {
                return Err(Error::Range { line, column, value, q });
            }
            data.push(value as Elem);
            count = column;
        }
        if count < width {
            return Err(Error::Parse {
                line,
                column: count + 1,
                message: format!("row has {count} entries, expected {width}"),
            });
        }
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::Parse { line, column: 1, message: format!("unexpected content after {k} matrix rows") });
    }
    Ok((Matrix::from_vec(&field, k, width, data)?, space))
}

/// Renders `g` in the matrix file format; `parse_matrix_file` inverts it.
pub fn write_matrix_file(g: &Matrix, space: &CodeSpace) -> Result<String> {
    space.check_matrix(g)?;
    let mut out = format!("{} {} {} {}\n", space.field().order(), space.chain_len(), space.chains(), g.rows());
    for r in 0..g.rows() {
        let row: Vec<String> = g.row(r).iter().map(u32::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceDoc {
    pub q: u32,
    pub m: usize,
    pub n: usize,
}

/// `perm` holds 1-based images; each block is a flat row-major `m x m` list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsometryDoc {
    pub perm: Vec<usize>,
    pub blocks: Vec<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub format: u32,
    pub space: SpaceDoc,
    #[serde(rename = "S")]
    pub s: Vec<Vec<u64>>,
    pub iso: IsometryDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StandaloneIsometryDoc {
    pub format: u32,
    pub space: SpaceDoc,
    #[serde(flatten)]
    pub iso: IsometryDoc,
}

fn space_doc(space: &CodeSpace) -> SpaceDoc {
    SpaceDoc { q: space.field().order(), m: space.chain_len(), n: space.chains() }
}

fn space_from_doc(doc: &SpaceDoc) -> Result<CodeSpace> {
    CodeSpace::new(&Field::new(u64::from(doc.q))?, doc.m, doc.n)
}

fn rows_doc(g: &Matrix) -> Vec<Vec<u64>> {
    (0..g.rows()).map(|r| g.row(r).iter().map(|&x| u64::from(x)).collect()).collect()
}

fn elements(field: &Field, values: &[u64]) -> Result<Vec<Elem>> {
    values.iter().map(|&v| field.element(v)).collect()
}

fn matrix_from_rows(field: &Field, rows: &[Vec<u64>]) -> Result<Matrix> {
    let rows: Vec<Vec<Elem>> = rows.iter().map(|r| elements(field, r)).collect::<Result<_>>()?;
    if let Some(bad) = rows.iter().find(|r| r.len() != rows.len()) {
        return Err(Error::DimensionMismatch(format!("row of length {} in a {}-row square matrix", bad.len(), rows.len())));
    }
    if rows.is_empty() {
        return Ok(Matrix::zeros(field, 0, 0));
    }
    Matrix::from_rows(field, &rows)
}

pub fn isometry_doc(iso: &Isometry) -> IsometryDoc {
    IsometryDoc {
        perm: iso.perm().iter().map(|&p| p + 1).collect(),
        blocks: iso.blocks().iter().map(|t| t.matrix().as_slice().iter().map(|&x| u64::from(x)).collect()).collect(),
    }
}

pub fn isometry_from_doc(doc: &IsometryDoc, space: &CodeSpace) -> Result<Isometry> {
    let m = space.chain_len();
    let field = space.field();
    let perm = doc
        .perm
        .iter()
        .map(|&p| p.checked_sub(1).ok_or_else(|| Error::InvalidPermutation("images are 1-based".to_string())))
        .collect::<Result<Vec<_>>>()?;
    let blocks = doc
        .blocks
        .iter()
        .map(|flat| {
            if flat.len() != m * m {
                return Err(Error::DimensionMismatch(format!("block has {} entries, expected {}", flat.len(), m * m)));
            }
            UpperTriangular::new(Matrix::from_vec(field, m, m, elements(field, flat)?)?)
        })
        .collect::<Result<Vec<_>>>()?;
    Isometry::new(space, perm, blocks)
}

pub fn witness_doc(w: &ReductionWitness) -> WitnessDoc {
    WitnessDoc {
        format: FORMAT_VERSION,
        space: space_doc(w.space()),
        s: rows_doc(&w.row_transform),
        iso: isometry_doc(&w.iso),
    }
}

pub fn witness_from_doc(doc: &WitnessDoc) -> Result<ReductionWitness> {
    check_version(doc.format)?;
    let space = space_from_doc(&doc.space)?;
    let s = matrix_from_rows(space.field(), &doc.s)?;
    ReductionWitness::new(s, isometry_from_doc(&doc.iso, &space)?)
}

fn check_version(v: u32) -> Result<()> {
    if v == FORMAT_VERSION {
        Ok(())
    } else {
        Err(Error::Json(format!("unsupported format version {v}")))
    }
}

pub fn witness_to_json(w: &ReductionWitness) -> String {
    serde_json::to_string_pretty(&witness_doc(w)).expect("serializable")
}

/// Reads a witness document. A document whose `"witness"` member is one is
/// also accepted.
pub fn witness_from_json(text: &str) -> Result<ReductionWitness> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    let value = match value.get("witness") {
        Some(inner) => inner.clone(),
        None => value,
    };
    witness_from_doc(&serde_json::from_value(value)?)
}

pub fn isometry_to_json(iso: &Isometry) -> String {
    let doc = StandaloneIsometryDoc { format: FORMAT_VERSION, space: space_doc(iso.space()), iso: isometry_doc(iso) };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

pub fn isometry_from_json(text: &str) -> Result<Isometry> {
    let doc: StandaloneIsometryDoc = serde_json::from_str(text)?;
    check_version(doc.format)?;
    isometry_from_doc(&doc.iso, &space_from_doc(&doc.space)?)
}

/// Full output of a reduction: the matrix together with its witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionDoc {
    pub format: u32,
    pub space: SpaceDoc,
    pub matrix: Vec<Vec<u64>>,
    pub witness: WitnessDoc,
}

pub fn reduction_to_json(g: &Matrix, w: &ReductionWitness) -> String {
    let doc = ReductionDoc {
        format: FORMAT_VERSION,
        space: space_doc(w.space()),
        matrix: rows_doc(g),
        witness: witness_doc(w),
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}
