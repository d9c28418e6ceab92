//! Loading observation tables for `compare`, `correlate` and `report`.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use gazekit::io_csv::{metrics_to_long, read_long_csv, read_metrics_csv, LongRow, LONG_HEADER, METRICS_HEADER};

use crate::error::{io_err, CliError, CliResult};

/// Reads either a long-format table or a metrics table (reshaped to long).
pub fn load_observations(path: &Path) -> CliResult<Vec<LongRow>> {
    let file = File::open(path).map_err(|e| io_err(path, e))?;
    let mut first = String::new();
    BufReader::new(file).read_line(&mut first).map_err(|e| io_err(path, e))?;
    let header = first.trim_end();
    if header == LONG_HEADER.join(",") {
        Ok(read_long_csv(path)?)
    } else if header.starts_with(&METRICS_HEADER[..3].join(",")) {
        Ok(metrics_to_long(&read_metrics_csv(path)?))
    } else {
        Err(CliError::Data(format!(
            "{}: not a long-format or metrics table (header `{header}`)",
            path.display()
        )))
    }
}

/// Variables in order of first appearance.
pub fn variables(rows: &[LongRow]) -> Vec<String> {
    let mut seen = Vec::new();
    for r in rows {
        if !seen.contains(&r.variable) {
            seen.push(r.variable.clone());
        }
    }
    seen
}

/// One value per participant and variable: the mean over that
/// participant's rows. A participant listed under two groups is an error.
pub fn per_participant(rows: &[LongRow]) -> CliResult<Vec<LongRow>> {
    let mut groups: BTreeMap<&str, &str> = BTreeMap::new();
    let mut sums: BTreeMap<(&str, &str), (f64, usize)> = BTreeMap::new();
    let mut order: Vec<(&str, &str)> = Vec::new();
    for r in rows {
        match groups.insert(&r.participant_id, &r.group) {
            Some(g) if g != r.group => {
                return Err(CliError::Data(format!(
                    "participant {} appears in groups {g} and {}",
                    r.participant_id, r.group
                )))
            }
            _ => {}
        }
        let key = (r.participant_id.as_str(), r.variable.as_str());
        let e = sums.entry(key).or_insert_with(|| {
            order.push(key);
            (0.0, 0)
        });
        e.0 += r.value;
        e.1 += 1;
    }
    Ok(order
        .into_iter()
        .map(|(p, v)| {
            let (s, n) = sums[&(p, v)];
            LongRow {
                participant_id: p.to_owned(),
                group: groups[p].to_owned(),
                variable: v.to_owned(),
                value: s / n as f64,
            }
        })
        .collect())
}

/// Values of `variable` for `group`, in table order.
pub fn group_values(rows: &[LongRow], variable: &str, group: &str) -> Vec<f64> {
    rows.iter()
        .filter(|r| r.variable == variable && r.group == group)
        .map(|r| r.value)
        .collect()
}

/// (participant, group, x, y) for participants that have both variables,
/// after per-participant averaging.
pub fn paired(rows: &[LongRow], x: &str, y: &str) -> CliResult<Vec<(String, String, f64, f64)>> {
    let avg = per_participant(rows)?;
    let lookup: BTreeMap<(&str, &str), f64> = avg
        .iter()
        .map(|r| ((r.participant_id.as_str(), r.variable.as_str()), r.value))
        .collect();
    let mut out = Vec::new();
    let mut seen = Vec::new();
    for r in &avg {
        if seen.contains(&r.participant_id) {
            continue;
        }
        seen.push(r.participant_id.clone());
        let p = r.participant_id.as_str();
        if let (Some(&vx), Some(&vy)) = (lookup.get(&(p, x)), lookup.get(&(p, y))) {
            out.push((p.to_owned(), r.group.clone(), vx, vy));
        }
    }
    Ok(out)
}
