//! Text sequence files: `#` comments, optional `# offset <k>`, then
//! `<index> <value>` lines with contiguous indices.

use std::fs;
use std::io::Write;
use std::path::Path;

use super::{Provenance, Sequence};
use crate::error::{Error, Result};
use crate::number::{format_rational, parse_rational};

pub fn parse_sequence_text(text: &str, label: &str) -> Result<(Vec<crate::Rational>, usize)> {
    let err = |line: usize, message: String| Error::Parse {
        path: label.to_string(),
        line,
        message,
    };
    let mut offset: Option<usize> = None;
    let mut terms = Vec::new();
    let mut expected: Option<usize> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim_end_matches('\r');
        if let Some(comment) = line.strip_prefix('#') {
            let comment = comment.trim();
            if let Some(rest) = comment.strip_prefix("offset") {
                if !terms.is_empty() {
                    return Err(err(line_no, "offset header after data".into()));
                }
                let k = rest
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| err(line_no, format!("invalid offset `{}`", rest.trim())))?;
                offset = Some(k);
            }
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        let (idx, val) = line
            .split_once(' ')
            .ok_or_else(|| err(line_no, "expected `<index> <value>`".into()))?;
        if val.is_empty() || val.contains(char::is_whitespace) {
            return Err(err(line_no, "expected a single space between index and value".into()));
        }
        let idx: usize = idx
            .parse()
            .map_err(|_| err(line_no, format!("invalid index `{idx}`")))?;
        let want = *expected.get_or_insert(offset.unwrap_or(0));
        if idx < want {
            return Err(err(line_no, format!("duplicate or decreasing index {idx}")));
        }
        if idx != want {
            return Err(err(line_no, format!("non-contiguous index {idx}, expected {want}")));
        }
        let value = parse_rational(val).map_err(|m| err(line_no, m))?;
        terms.push(value);
        expected = Some(want + 1);
    }
    if terms.is_empty() {
        return Err(err(0, "no data lines".into()));
    }
    Ok((terms, offset.unwrap_or(0)))
}

pub fn render_sequence_text(seq: &Sequence) -> String {
    let mut out = String::new();
    out.push_str(&format!("# provenance {}\n", seq.provenance()));
    out.push_str(&format!("# offset {}\n", seq.offset()));
    for (k, t) in seq.terms().iter().enumerate() {
        out.push_str(&format!("{} {}\n", seq.offset() + k, format_rational(t)));
    }
    out
}

pub fn load_sequence(path: impl AsRef<Path>) -> Result<Sequence> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let (terms, offset) = parse_sequence_text(&text, &path.display().to_string())?;
    Sequence::new(terms, offset, Provenance::File(path.to_path_buf()))
}

/// Writes to a temporary file in the target directory, then renames.
pub fn save_sequence(seq: &Sequence, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| Error::io(dir, e))?;
    tmp.write_all(render_sequence_text(seq).as_bytes())
        .map_err(|e| Error::io(tmp.path(), e))?;
    tmp.persist(path).map_err(|e| Error::io(path, e.error))?;
    Ok(())
}
