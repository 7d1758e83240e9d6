use std::fmt::Write as _;

use bisep_core::geometry::{BiPoint, Point1, PointSet};
use bisep_core::harness::{grid_pointset, CoordinateScheme};
use bisep_core::Error;

use crate::CliError;

/// A parsed input file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InputDocument {
    Points(Vec<BiPoint>),
    Grid { rows: Vec<Vec<bool>>, scheme: CoordinateScheme },
}

impl InputDocument {
    pub fn kind(&self) -> &'static str {
        match self {
            InputDocument::Points(_) => "points",
            InputDocument::Grid { .. } => "grid",
        }
    }

    pub fn scheme(&self) -> Option<CoordinateScheme> {
        match self {
            InputDocument::Points(_) => None,
            InputDocument::Grid { scheme, .. } => Some(*scheme),
        }
    }

    pub fn to_pointset(&self) -> Result<PointSet, CliError> {
        Ok(match self {
            InputDocument::Points(points) => PointSet::new(points.clone())?,
            InputDocument::Grid { rows, scheme } => {
                let s = rows[0].len();
                let cells: Vec<bool> = rows.iter().flatten().copied().collect();
                grid_pointset(rows.len(), s, &cells, *scheme)?
            }
        })
    }

    /// Grid text with a scheme directive, preceded by `header` comment lines.
    pub fn grid_text(rows: &[Vec<bool>], scheme: CoordinateScheme, header: &[String]) -> String {
        let mut out = String::new();
        for h in header {
            let _ = writeln!(out, "# {h}");
        }
        let _ = writeln!(out, "# scheme: {scheme}");
        for row in rows {
            out.extend(row.iter().map(|&c| if c { '1' } else { '0' }));
            out.push('\n');
        }
        out
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> CliError {
    CliError::Parse { line, message: message.into() }
}

/// Parses an input file. The first non-comment line decides the format: a
/// `:` means explicit points, otherwise a `0`/`1` grid.
pub fn parse(text: &str) -> Result<InputDocument, CliError> {
    let mut scheme = None;
    let mut body = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(name) = comment.trim().strip_prefix("scheme:") {
                let parsed = name.trim().parse::<CoordinateScheme>().map_err(|e| parse_err(k + 1, e.to_string()))?;
                scheme = Some((k + 1, parsed));
            }
            continue;
        }
        if !line.is_empty() {
            body.push((k + 1, line));
        }
    }
    let Some(&(_, first)) = body.first() else {
        return Err(CliError::Input("input contains no points".into()));
    };
    if first.contains(':') {
        if let Some((line, _)) = scheme {
            return Err(parse_err(line, "a scheme directive only applies to grid input"));
        }
        let points = body
            .iter()
            .map(|&(line, text)| parse_point(text).map_err(|m| parse_err(line, m)))
            .collect::<Result<Vec<_>, _>>()?;
        check_distinct(&points)?;
        Ok(InputDocument::Points(points))
    } else {
        let width = first.len();
        let mut rows = Vec::with_capacity(body.len());
        for &(line, text) in &body {
            if text.len() != width {
                return Err(parse_err(line, format!("grid row has {} cells, expected {width}", text.len())));
            }
            let row = text
                .chars()
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    other => Err(parse_err(line, format!("unexpected character `{other}` in grid row"))),
                })
                .collect::<Result<Vec<bool>, _>>()?;
            rows.push(row);
        }
        if !rows.iter().flatten().any(|&c| c) {
            return Err(CliError::Input("grid contains no `1` cell".into()));
        }
        Ok(InputDocument::Grid { rows, scheme: scheme.map_or(CoordinateScheme::Generic, |s| s.1) })
    }
}

fn parse_point(text: &str) -> Result<BiPoint, String> {
    let (p, q) = text.split_once(',').ok_or_else(|| format!("expected `a:b,c:d`, found `{text}`"))?;
    Ok(BiPoint::new(parse_p1(p)?, parse_p1(q)?))
}

fn parse_p1(text: &str) -> Result<Point1, String> {
    let (a, b) = text.split_once(':').ok_or_else(|| format!("expected `a:b`, found `{}`", text.trim()))?;
    let int = |s: &str| s.trim().parse::<i64>().map_err(|e| format!("bad coordinate `{}`: {e}", s.trim()));
    Point1::from_ints(int(a)?, int(b)?).map_err(|e| e.to_string())
}

fn check_distinct(points: &[BiPoint]) -> Result<(), CliError> {
    for (k, p) in points.iter().enumerate() {
        if points[..k].contains(p) {
            return Err(CliError::Core(Error::DuplicatePoint(p.to_string())));
        }
    }
    Ok(())
}
