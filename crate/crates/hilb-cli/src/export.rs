//! File forms: OFF meshes of 2-faces, CSV records of decompositions, and the
//! row types written by `ideals` and `charts`. Every number is an integer
//! (points as numerators over a stated denominator).

use std::collections::{BTreeMap, BTreeSet};

use ideal_calculus::IdealJson;
use serde::{Deserialize, Serialize};
use toric_lattice::{Decomposition, DecompositionJson};

use crate::CliError;

fn parse_err(e: impl std::fmt::Display) -> CliError {
    CliError::Parse(e.to_string())
}

fn ints<T: std::str::FromStr>(s: &str, sep: char) -> Result<Vec<T>, CliError>
where
    T::Err: std::fmt::Display,
{
    s.split(sep)
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<T>().map_err(parse_err))
        .collect()
}

fn spaced<T: ToString>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Triangles (2-faces) of some cells, vertices projected by dropping the last
/// barycentric coordinate. Only n = 3 (padded with z = 0) and n = 4.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OffMesh {
    pub denominator: i64,
    pub vertices: Vec<[i64; 3]>,
    pub faces: Vec<Vec<usize>>,
}

impl OffMesh {
    pub fn from_cells(d: &Decomposition, cells: &[usize]) -> Result<Self, CliError> {
        let n = d.n();
        if !(3..=4).contains(&n) {
            return Err(CliError::Usage(format!("OFF export needs n = 3 or 4, got {n}")));
        }
        let wanted: BTreeSet<usize> = cells.iter().copied().collect();
        let faces: Vec<Vec<usize>> = d.face_index().by_dim[2]
            .iter()
            .filter(|(_, owners)| owners.iter().any(|c| wanted.contains(c)))
            .map(|(f, _)| f.clone())
            .collect();
        let used: BTreeSet<usize> = faces.iter().flatten().copied().collect();
        let index: BTreeMap<usize, usize> = used.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let vertices = used
            .iter()
            .map(|&v| {
                let y = &d.vertices()[v];
                let mut p = [0; 3];
                p[..n - 1].copy_from_slice(&y[..n - 1]);
                p
            })
            .collect();
        Ok(OffMesh {
            denominator: d.denominator(),
            vertices,
            faces: faces.iter().map(|f| f.iter().map(|v| index[v]).collect()).collect(),
        })
    }

    pub fn whole(d: &Decomposition) -> Result<Self, CliError> {
        let all: Vec<usize> = (0..d.cells().len()).collect();
        OffMesh::from_cells(d, &all)
    }

    pub fn emit(&self) -> String {
        let mut s = format!(
            "OFF\n# denominator {}\n{} {} 0\n",
            self.denominator,
            self.vertices.len(),
            self.faces.len()
        );
        for v in &self.vertices {
            s.push_str(&spaced(v));
            s.push('\n');
        }
        for f in &self.faces {
            s.push_str(&format!("{} {}\n", f.len(), spaced(f)));
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut lines = text.lines();
        if lines.next() != Some("OFF") {
            return Err(CliError::Parse("missing OFF header".into()));
        }
        let den = lines
            .next()
            .and_then(|l| l.strip_prefix("# denominator "))
            .ok_or_else(|| CliError::Parse("missing denominator comment".into()))?;
        let denominator = den.trim().parse().map_err(parse_err)?;
        let counts: Vec<usize> = ints(lines.next().unwrap_or(""), ' ')?;
        let [nv, nf, _] = counts[..] else {
            return Err(CliError::Parse("bad count line".into()));
        };
        let mut vertices = Vec::with_capacity(nv);
        for _ in 0..nv {
            let v: Vec<i64> = ints(lines.next().unwrap_or(""), ' ')?;
            vertices.push(<[i64; 3]>::try_from(v).map_err(|v| CliError::Parse(format!("vertex {v:?}")))?);
        }
        let mut faces = Vec::with_capacity(nf);
        for _ in 0..nf {
            let f: Vec<usize> = ints(lines.next().unwrap_or(""), ' ')?;
            if f.is_empty() || f[0] != f.len() - 1 || f[1..].iter().any(|&v| v >= nv) {
                return Err(CliError::Parse(format!("face {f:?}")));
            }
            faces.push(f[1..].to_vec());
        }
        if lines.any(|l| !l.trim().is_empty()) {
            return Err(CliError::Parse("trailing data after the faces".into()));
        }
        Ok(OffMesh {
            denominator,
            vertices,
            faces,
        })
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct Record {
    record: String,
    index: usize,
    values: String,
}

fn csv_string<T: Serialize>(rows: &[T]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(parse_err)?;
    }
    let bytes = w.into_inner().map_err(parse_err)?;
    String::from_utf8(bytes).map_err(parse_err)
}

fn csv_rows<T: for<'de> Deserialize<'de>>(text: &str) -> Result<Vec<T>, CliError> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .collect::<Result<_, _>>()
        .map_err(parse_err)
}

/// One record per line: `n`, `denominator`, then every `generator`,
/// `vertex`, `cell` and (for resolutions) the `choice` vector.
pub fn decomposition_csv(j: &DecompositionJson, choice: Option<&[u8]>) -> Result<String, CliError> {
    let rec = |record: &str, index: usize, values: String| Record {
        record: record.into(),
        index,
        values,
    };
    let mut rows = vec![rec("n", 0, j.n.to_string()), rec("denominator", 0, j.denominator.to_string())];
    rows.extend(j.group_generators.iter().enumerate().map(|(k, g)| rec("generator", k, spaced(g))));
    rows.extend(j.vertices.iter().enumerate().map(|(k, v)| rec("vertex", k, spaced(v))));
    rows.extend(j.maximal_cells.iter().enumerate().map(|(k, c)| rec("cell", k, spaced(c))));
    if let Some(c) = choice {
        rows.push(rec("choice", 0, spaced(c)));
    }
    csv_string(&rows)
}

pub fn parse_decomposition_csv(text: &str) -> Result<(DecompositionJson, Option<Vec<u8>>), CliError> {
    let rows: Vec<Record> = csv_rows(text)?;
    let mut j = DecompositionJson {
        n: 0,
        denominator: 0,
        group_generators: Vec::new(),
        vertices: Vec::new(),
        maximal_cells: Vec::new(),
    };
    let mut choice = None;
    let push = |v: &mut Vec<_>, index: usize, item, what: &str| {
        if index != v.len() {
            return Err(CliError::Parse(format!("{what} {index} out of order")));
        }
        v.push(item);
        Ok(())
    };
    for r in rows {
        match r.record.as_str() {
            "n" => j.n = r.values.trim().parse().map_err(parse_err)?,
            "denominator" => j.denominator = r.values.trim().parse().map_err(parse_err)?,
            "generator" => push(&mut j.group_generators, r.index, ints(&r.values, ' ')?, "generator")?,
            "vertex" => push(&mut j.vertices, r.index, ints(&r.values, ' ')?, "vertex")?,
            "cell" => {
                let c: Vec<usize> = ints(&r.values, ' ')?;
                if r.index != j.maximal_cells.len() {
                    return Err(CliError::Parse(format!("cell {} out of order", r.index)));
                }
                j.maximal_cells.push(c);
            }
            "choice" => choice = Some(ints(&r.values, ' ')?),
            other => return Err(CliError::Parse(format!("unknown record {other:?}"))),
        }
    }
    Ok((j, choice))
}

/// A central ideal with the cell of Ξ* it corresponds to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealRow {
    pub index: usize,
    #[serde(flatten)]
    pub ideal: IdealJson,
    pub cell: usize,
    pub label: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct IdealCsv {
    index: usize,
    r: i64,
    #[serde(rename = "type")]
    kind: String,
    l: String,
    /// "12:1 13:1 …"
    l_pair: String,
    /// exponent vectors separated by ';'
    generators: String,
    cell: usize,
    label: String,
}

pub fn ideals_csv(rows: &[IdealRow]) -> Result<String, CliError> {
    let flat: Vec<IdealCsv> = rows
        .iter()
        .map(|row| IdealCsv {
            index: row.index,
            r: row.ideal.r,
            kind: row.ideal.kind.clone(),
            l: spaced(&row.ideal.l),
            l_pair: row.ideal.l_pair.iter().map(|(k, v)| format!("{k}:{v}")).collect::<Vec<_>>().join(" "),
            generators: row.ideal.generators.iter().map(|g| spaced(g)).collect::<Vec<_>>().join(";"),
            cell: row.cell,
            label: row.label.clone(),
        })
        .collect();
    csv_string(&flat)
}

pub fn parse_ideals_csv(text: &str) -> Result<Vec<IdealRow>, CliError> {
    let flat: Vec<IdealCsv> = csv_rows(text)?;
    flat.into_iter()
        .map(|f| {
            let l: Vec<i64> = ints(&f.l, ' ')?;
            let l = <[i64; 4]>::try_from(l).map_err(|l| CliError::Parse(format!("l = {l:?}")))?;
            let mut l_pair = BTreeMap::new();
            for kv in f.l_pair.split(' ').filter(|s| !s.is_empty()) {
                let (k, v) = kv.split_once(':').ok_or_else(|| CliError::Parse(format!("lPair entry {kv:?}")))?;
                l_pair.insert(k.to_string(), v.parse().map_err(parse_err)?);
            }
            let generators = f.generators.split(';').map(|g| ints(g, ' ')).collect::<Result<_, _>>()?;
            Ok(IdealRow {
                index: f.index,
                ideal: IdealJson {
                    r: f.r,
                    kind: f.kind,
                    l,
                    l_pair,
                    generators,
                },
                cell: f.cell,
                label: f.label,
            })
        })
        .collect()
}

/// The affine chart of one maximal cell: slot k pairs to 1 with `vertices[k]`
/// and carries the exponent vector `coordinates[k]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartRow {
    pub cell: usize,
    pub label: String,
    pub vertices: Vec<usize>,
    pub coordinates: Vec<Vec<i64>>,
}

#[derive(Debug, Serialize, Deserialize)]
struct ChartCsv {
    cell: usize,
    label: String,
    slot: usize,
    vertex: usize,
    coordinate: String,
}

pub fn charts_csv(rows: &[ChartRow]) -> Result<String, CliError> {
    let mut flat = Vec::new();
    for row in rows {
        for (slot, (v, c)) in row.vertices.iter().zip(&row.coordinates).enumerate() {
            flat.push(ChartCsv {
                cell: row.cell,
                label: row.label.clone(),
                slot,
                vertex: *v,
                coordinate: spaced(c),
            });
        }
    }
    csv_string(&flat)
}

pub fn parse_charts_csv(text: &str) -> Result<Vec<ChartRow>, CliError> {
    let flat: Vec<ChartCsv> = csv_rows(text)?;
    let mut out: Vec<ChartRow> = Vec::new();
    for f in flat {
        let coordinate = ints(&f.coordinate, ' ')?;
        match out.last_mut() {
            Some(row) if row.cell == f.cell && f.slot == row.vertices.len() => {
                row.vertices.push(f.vertex);
                row.coordinates.push(coordinate);
            }
            _ if f.slot == 0 => out.push(ChartRow {
                cell: f.cell,
                label: f.label,
                vertices: vec![f.vertex],
                coordinates: vec![coordinate],
            }),
            _ => return Err(CliError::Parse(format!("slot {} of cell {} out of order", f.slot, f.cell))),
        }
    }
    Ok(out)
}
