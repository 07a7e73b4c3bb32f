//! The line-oriented document format for mass functions.
//!
//! Documents name outcomes and subsets by label so corpora stay
//! human-editable; bitmask order is an internal detail. The grammar:
//!
//! ```text
//! # comments and blank lines are ignored
//! frame: theta1 theta2 theta3
//!
//! bba: m1
//! {theta2} 0.9
//! ALL 0.1
//! end
//! ```
//!
//! The first significant line declares the frame. Each `bba:` block lists
//! `subset value` pairs until `end`. A subset is `{}` for the empty set,
//! `{a,b}` for a set of labels, or `ALL` for the whole frame. Masses in a
//! block must be non-negative and sum to one within 1e-9.
//!
//! [`Document::to_text`] prints values in shortest round-trip form, so
//! `parse(to_text(doc)) == doc` exactly for every valid document.

use std::fmt;

use lns_core::{Frame, MassFunction, SubsetIndex};

/// A parsed document: frame labels plus named mass assignments, with
/// subsets resolved to bitmasks.
#[derive(Clone, Debug, PartialEq)]
pub struct Document {
    pub frame: Vec<String>,
    pub bbas: Vec<NamedBba>,
}

/// One named mass assignment, entries in file order.
#[derive(Clone, Debug, PartialEq)]
pub struct NamedBba {
    pub name: String,
    pub entries: Vec<(u32, f64)>,
}

/// A parse failure with its 1-based line number.
#[derive(Clone, Debug, PartialEq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Failure to turn a document into frame and mass functions.
#[derive(Clone, Debug, PartialEq)]
pub enum LoadError {
    Parse(ParseError),
    Invalid(lns_core::Error),
}

impl fmt::Display for LoadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoadError::Parse(e) => e.fmt(f),
            LoadError::Invalid(e) => e.fmt(f),
        }
    }
}

impl std::error::Error for LoadError {}

impl From<ParseError> for LoadError {
    fn from(e: ParseError) -> Self {
        LoadError::Parse(e)
    }
}

impl From<lns_core::Error> for LoadError {
    fn from(e: lns_core::Error) -> Self {
        LoadError::Invalid(e)
    }
}

fn fail<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

fn valid_label(label: &str) -> bool {
    !label.is_empty()
        && label
            .chars()
            .all(|c| !c.is_whitespace() && !matches!(c, '{' | '}' | ',' | ':' | '#'))
}

impl Document {
    /// Parses document text. Checks syntax, label resolution, duplicate
    /// subsets and the unit-sum constraint; never panics on malformed
    /// input.
    pub fn parse(text: &str) -> Result<Document, ParseError> {
        let mut frame: Option<Vec<String>> = None;
        let mut bbas: Vec<NamedBba> = Vec::new();
        let mut current: Option<(usize, NamedBba)> = None;

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }

            if let Some(rest) = line.strip_prefix("frame:") {
                if frame.is_some() {
                    return fail(line_no, "frame declared twice");
                }
                if current.is_some() {
                    return fail(line_no, "frame declaration inside a bba block");
                }
                let labels: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                if labels.is_empty() {
                    return fail(line_no, "frame needs at least one outcome label");
                }
                for label in &labels {
                    if !valid_label(label) {
                        return fail(line_no, format!("invalid outcome label `{label}`"));
                    }
                    if label == "ALL" {
                        return fail(line_no, "`ALL` is reserved for the whole frame");
                    }
                }
                for (i, label) in labels.iter().enumerate() {
                    if labels[..i].contains(label) {
                        return fail(line_no, format!("duplicate outcome label `{label}`"));
                    }
                }
                frame = Some(labels);
                continue;
            }

            let Some(frame_labels) = frame.as_ref() else {
                return fail(line_no, "expected a `frame:` declaration first");
            };

            if let Some(rest) = line.strip_prefix("bba:") {
                if let Some((open_line, _)) = &current {
                    return fail(
                        line_no,
                        format!("bba block starting at line {open_line} is missing `end`"),
                    );
                }
                let name = rest.trim();
                if name.is_empty() {
                    return fail(line_no, "bba needs a name");
                }
                current = Some((
                    line_no,
                    NamedBba {
                        name: name.to_string(),
                        entries: Vec::new(),
                    },
                ));
                continue;
            }

            if line == "end" {
                match current.take() {
                    Some((open_line, bba)) => {
                        let sum: f64 = bba.entries.iter().map(|&(_, v)| v).sum();
                        if (sum - 1.0).abs() > 1e-9 {
                            return fail(
                                line_no,
                                format!("masses of `{}` (line {open_line}) sum to {sum}, expected 1", bba.name),
                            );
                        }
                        bbas.push(bba);
                    }
                    None => return fail(line_no, "`end` without an open bba block"),
                }
                continue;
            }

            let Some((_, bba)) = current.as_mut() else {
                return fail(line_no, format!("unexpected line `{line}` outside a bba block"));
            };

            let (subset_text, value_text) = match line.rsplit_once(char::is_whitespace) {
                Some(parts) => parts,
                None => return fail(line_no, format!("expected `subset value`, got `{line}`")),
            };
            let bits = parse_subset(subset_text.trim(), frame_labels)
                .map_err(|message| ParseError { line: line_no, message })?;
            let value: f64 = match value_text.trim().parse() {
                Ok(v) => v,
                Err(_) => return fail(line_no, format!("invalid mass value `{value_text}`")),
            };
            if !value.is_finite() || value < 0.0 {
                return fail(line_no, format!("mass value {value} must be finite and non-negative"));
            }
            if bba.entries.iter().any(|&(b, _)| b == bits) {
                return fail(line_no, format!("subset `{subset_text}` assigned twice"));
            }
            bba.entries.push((bits, value));
        }

        if let Some((open_line, _)) = current {
            return fail(open_line, "bba block is missing `end`");
        }
        let Some(frame) = frame else {
            return fail(1, "document has no `frame:` declaration");
        };
        Ok(Document { frame, bbas })
    }

    /// Canonical serialization; exact round trip through [`Document::parse`].
    pub fn to_text(&self) -> String {
        let full = (1u64 << self.frame.len()) - 1;
        let mut out = String::new();
        out.push_str("frame:");
        for label in &self.frame {
            out.push(' ');
            out.push_str(label);
        }
        out.push('\n');
        for bba in &self.bbas {
            out.push('\n');
            out.push_str("bba: ");
            out.push_str(&bba.name);
            out.push('\n');
            for &(bits, value) in &bba.entries {
                out.push_str(&format_subset(bits, u64::from(bits) == full, &self.frame));
                out.push(' ');
                out.push_str(&format!("{value}"));
                out.push('\n');
            }
            out.push_str("end\n");
        }
        out
    }

    /// Resolves the document into a frame and named mass functions.
    pub fn to_masses(
        &self,
        max_outcomes: usize,
    ) -> Result<(Frame, Vec<(String, MassFunction)>), LoadError> {
        let frame = Frame::with_max_outcomes(self.frame.clone(), max_outcomes)?;
        let mut out = Vec::with_capacity(self.bbas.len());
        for bba in &self.bbas {
            let assignments: Vec<(SubsetIndex, f64)> = bba
                .entries
                .iter()
                .map(|&(bits, value)| (SubsetIndex::from_bits(bits), value))
                .collect();
            out.push((bba.name.clone(), MassFunction::new(frame.clone(), &assignments)?));
        }
        Ok((frame, out))
    }
}

/// Parses and resolves in one step.
pub fn load(text: &str, max_outcomes: usize) -> Result<(Frame, Vec<(String, MassFunction)>), LoadError> {
    Document::parse(text)?.to_masses(max_outcomes)
}

fn parse_subset(text: &str, labels: &[String]) -> Result<u32, String> {
    if text == "ALL" {
        return Ok(((1u64 << labels.len()) - 1) as u32);
    }
    let Some(inner) = text.strip_prefix('{').and_then(|t| t.strip_suffix('}')) else {
        return Err(format!("invalid subset `{text}`: expected `{{...}}` or `ALL`"));
    };
    let inner = inner.trim();
    let mut bits = 0u32;
    if inner.is_empty() {
        return Ok(bits);
    }
    for part in inner.split(',') {
        let label = part.trim();
        match labels.iter().position(|l| l == label) {
            Some(i) => bits |= 1 << i,
            None => return Err(format!("unknown outcome label `{label}`")),
        }
    }
    Ok(bits)
}

/// Renders a subset bitmask with the document conventions.
pub fn format_subset(bits: u32, is_full: bool, labels: &[String]) -> String {
    if is_full {
        return "ALL".to_string();
    }
    let members: Vec<&str> = labels
        .iter()
        .enumerate()
        .filter(|&(i, _)| bits & (1 << i) != 0)
        .map(|(_, l)| l.as_str())
        .collect();
    format!("{{{}}}", members.join(","))
}
