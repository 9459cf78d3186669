//! Triple systems: the affine plane of order 3 and cyclic Steiner triple
//! systems generated by difference triples.

use serde::{Deserialize, Serialize};

use crate::error::{GeoError, Result};

/// A set of blocks on points `0..n`; each block is sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDesign {
    pub n: usize,
    pub blocks: Vec<Vec<usize>>,
}

/// Pair coverage defects of a block design.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DesignReport {
    pub uncovered: Vec<(usize, usize)>,
    /// `(u, v, count)` for pairs covered more than once.
    pub repeated: Vec<(usize, usize, usize)>,
}

impl DesignReport {
    pub fn is_valid(&self) -> bool {
        self.uncovered.is_empty() && self.repeated.is_empty()
    }
}

pub fn validate_design(d: &BlockDesign) -> DesignReport {
    let n = d.n;
    let mut count = vec![0usize; n * n];
    for b in &d.blocks {
        for (i, &u) in b.iter().enumerate() {
            for &v in &b[i + 1..] {
                let (a, c) = if u < v { (u, v) } else { (v, u) };
                if c < n {
                    count[a * n + c] += 1;
                }
            }
        }
    }
    let mut report = DesignReport::default();
    for u in 0..n {
        for v in u + 1..n {
            match count[u * n + v] {
                0 => report.uncovered.push((u, v)),
                1 => {}
                c => report.repeated.push((u, v, c)),
            }
        }
    }
    report
}

/// STS(9) on points `3r + c` of the 3x3 grid, as four parallel classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sts9 {
    pub design: BlockDesign,
    pub classes: [[[usize; 3]; 3]; 4],
}

/// Rows, columns, diagonals and anti-diagonals of the grid (in that order).
pub fn sts9() -> Sts9 {
    let rows = [[0, 1, 2], [3, 4, 5], [6, 7, 8]];
    let cols = [[0, 3, 6], [1, 4, 7], [2, 5, 8]];
    let diag = [[0, 4, 8], [1, 5, 6], [2, 3, 7]];
    let anti = [[0, 5, 7], [1, 3, 8], [2, 4, 6]];
    let classes = [rows, cols, diag, anti];
    let blocks = classes.iter().flatten().map(|b| b.to_vec()).collect();
    Sts9 { design: BlockDesign { n: 9, blocks }, classes }
}

/// Column block of the difference table a triple belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Column {
    #[serde(rename = "E1-3")]
    E13,
    #[serde(rename = "E4-6")]
    E46,
    #[serde(rename = "E7-9")]
    E79,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub triples: Vec<(Column, [usize; 3])>,
    #[serde(rename = "box")]
    pub box_label: usize,
}

/// Difference triples for a cyclic STS(18k + 1), arranged in rows with a box
/// label per row; triples in one box share a color block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferenceTripleTable {
    pub k: usize,
    pub rows: Vec<TableRow>,
}

impl DifferenceTripleTable {
    pub fn n(&self) -> usize {
        18 * self.k + 1
    }

    pub fn box_count(&self) -> usize {
        self.k / 2 + 1
    }

    /// All triples with their box label, in row order.
    pub fn triples(&self) -> impl Iterator<Item = ([usize; 3], usize)> + '_ {
        self.rows.iter().flat_map(|r| r.triples.iter().map(move |&(_, t)| (t, r.box_label)))
    }

    /// Checks every invariant; the error names the first bad row (1-based).
    pub fn validate(&self) -> Result<()> {
        let k = self.k;
        let n = self.n();
        let top = 9 * k;
        let mut seen = vec![false; top + 1];
        for (r, row) in self.rows.iter().enumerate() {
            let bad = |reason: String| GeoError::TableRow { row: r + 1, reason };
            if row.box_label == 0 || row.box_label > self.box_count() {
                return Err(bad(format!("box label {} outside 1..={}", row.box_label, self.box_count())));
            }
            for &(_, d) in &row.triples {
                if !(d[0] < d[1] && d[1] < d[2]) {
                    return Err(bad(format!("triple {d:?} not increasing")));
                }
                if d[0] + d[1] != d[2] && (d[0] + d[1] + d[2]) % n != 0 {
                    return Err(bad(format!("triple {d:?} neither sums nor closes mod {n}")));
                }
                for &x in &d {
                    if x == 0 || x > top {
                        return Err(bad(format!("entry {x} outside 1..={top}")));
                    }
                    if seen[x] {
                        return Err(bad(format!("entry {x} repeated")));
                    }
                    seen[x] = true;
                }
            }
        }
        if let Some(x) = (1..=top).find(|&x| !seen[x]) {
            return Err(GeoError::TableRow { row: 0, reason: format!("difference {x} missing") });
        }
        Ok(())
    }
}

/// Generates the table for even `k` and validates it. `k = 2` is rejected.
pub fn difference_triples(k: usize) -> Result<DifferenceTripleTable> {
    if k < 4 || k % 2 == 1 {
        return Err(GeoError::InvalidArgument(format!("difference table needs even k >= 4, got {k}")));
    }
    let t = generate_rows(k);
    t.validate()?;
    Ok(t)
}

pub(crate) fn generate_rows(k: usize) -> DifferenceTripleTable {
    let half = k / 2;
    let mut rows: Vec<TableRow> = (1..=k + 2)
        .map(|r| {
            let box_label = if r < half {
                half - r
            } else if r <= k {
                r + 1 - half
            } else if r == k + 1 {
                half + 1
            } else {
                half
            };
            TableRow { triples: Vec::new(), box_label }
        })
        .collect();
    for j in 1..=k {
        let e13 = [3 * j - 2, 4 * k + 2 - j, 4 * k + 2 * j];
        rows[j + 1].triples.push((Column::E13, e13));
    }
    for j in 1..=k {
        let e46 =
            if j == 1 { [3 * k, 3 * k + 1, 6 * k + 1] } else { [3 * k + 3 - 3 * j, 4 * k + 2 * j - 1, 7 * k + 2 - j] };
        let d3 = if j <= half { 8 * k + 2 * j } else { 10 * k + 1 - 2 * j };
        let e79 = [3 * j - 1, 8 * k + 1 - j, d3];
        rows[j - 1].triples.push((Column::E46, e46));
        rows[j - 1].triples.push((Column::E79, e79));
    }
    DifferenceTripleTable { k, rows }
}

/// Blocks `{s, s + d1, s + d1 + d2} mod n` for every triple and shift `s`,
/// grouped by triple in table order, shifts ascending.
pub fn cyclic_sts(n: usize, table: &DifferenceTripleTable) -> Result<BlockDesign> {
    if n != table.n() {
        return Err(GeoError::InvalidArgument(format!(
            "cyclic STS for k = {} needs n = {}, got {n}",
            table.k,
            table.n()
        )));
    }
    let mut blocks = Vec::with_capacity(n * (n - 1) / 6);
    for (d, _) in table.triples() {
        for s in 0..n {
            let mut b = vec![s, (s + d[0]) % n, (s + d[0] + d[1]) % n];
            b.sort_unstable();
            blocks.push(b);
        }
    }
    let design = BlockDesign { n, blocks };
    let report = validate_design(&design);
    if !report.is_valid() {
        return Err(GeoError::DesignInvalid(format!(
            "{} uncovered and {} repeated pairs",
            report.uncovered.len(),
            report.repeated.len()
        )));
    }
    Ok(design)
}
