//! Text forms for direction sequences, device expressions and scripts.
//!
//! A sequence is whitespace-separated direction tokens (`MRF MLB`), all from
//! one solid. A device expression is `atom ("." atom)*` with atoms `fb`,
//! `lh`, `lr`, `octa`, `diam` and `T0`..`T11`, applied left to right:
//! `fb.lr` is front-back inversion followed by left-right inversion.
//!
//! Scripts are line oriented:
//!
//! ```text
//! # comment
//! seq a = MRF MLB
//! form g @ primary = 0 2 4 6 8 10
//! apply fb a -> a_fb
//! apply T3 g -> g3
//! ```
//!
//! Every error carries a 1-based line and column, and errors inside a
//! sequence or expression also carry the 1-based index of the offending
//! token or atom.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::devices::{compose_devices, Device, MovementSequence};
use crate::error::Error;
use crate::polyhedra::{Direction, Solid};
use crate::scale::{apply_device_on_clock, Scale, ScaleLibrary, TraceForm};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnknownToken,
    MixedSolid,
    Empty,
    UnknownDevice,
    Syntax,
    DuplicateName,
    UndeclaredName,
    Evaluation,
}

/// A diagnostic pinned to a line and column of the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{col}: {message}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub line: usize,
    pub col: usize,
    /// 1-based index of the token or atom at fault, when there is one.
    pub token: Option<usize>,
    pub message: String,
}

impl ParseError {
    fn new(kind: ParseErrorKind, line: usize, col: usize, message: impl Into<String>) -> Self {
        ParseError {
            kind,
            line,
            col,
            token: None,
            message: message.into(),
        }
    }

    fn at_token(mut self, token: usize) -> Self {
        self.token = Some(token);
        self
    }
}

/// Words with their 1-based character columns.
fn words(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (i, c) in text.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &text[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &text[s..]));
    }
    out.into_iter()
        .map(|(byte, w)| (text[..byte].chars().count() + 1, w))
        .collect()
}

fn parse_sequence_words(
    words: &[(usize, &str)],
    line: usize,
    end_col: usize,
) -> Result<MovementSequence, ParseError> {
    if words.is_empty() {
        return Err(ParseError::new(
            ParseErrorKind::Empty,
            line,
            end_col,
            "expected at least one direction",
        ));
    }
    let mut steps: Vec<Direction> = Vec::with_capacity(words.len());
    for (i, &(col, word)) in words.iter().enumerate() {
        let direction = Direction::from_token(word).map_err(|_| {
            ParseError::new(
                ParseErrorKind::UnknownToken,
                line,
                col,
                format!("unknown direction `{word}` (token {})", i + 1),
            )
            .at_token(i + 1)
        })?;
        if let Some(first) = steps.first() {
            if first.solid() != direction.solid() {
                return Err(ParseError::new(
                    ParseErrorKind::MixedSolid,
                    line,
                    col,
                    format!(
                        "`{word}` belongs to the {} but the sequence started on the {} (token {})",
                        direction.solid(),
                        first.solid(),
                        i + 1
                    ),
                )
                .at_token(i + 1));
            }
        }
        steps.push(direction);
    }
    Ok(MovementSequence::new(steps).expect("nonempty, one solid"))
}

/// Parses whitespace-separated direction tokens.
pub fn parse_sequence(text: &str) -> Result<MovementSequence, ParseError> {
    parse_sequence_words(&words(text), 1, text.chars().count() + 1)
}

/// Canonical text: tokens separated by single spaces.
pub fn serialize_sequence(seq: &MovementSequence) -> String {
    seq.to_string()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DeviceAtom {
    FrontBack,
    LowHigh,
    LeftRight,
    Octahedral,
    Diametral,
    Transposition(u8),
}

impl DeviceAtom {
    fn parse(word: &str) -> Option<DeviceAtom> {
        Some(match word {
            "fb" => DeviceAtom::FrontBack,
            "lh" => DeviceAtom::LowHigh,
            "lr" => DeviceAtom::LeftRight,
            "octa" => DeviceAtom::Octahedral,
            "diam" => DeviceAtom::Diametral,
            _ => {
                let digits = word.strip_prefix('T')?;
                if digits.is_empty() || digits.len() > 2 || !digits.bytes().all(|b| b.is_ascii_digit()) {
                    return None;
                }
                let k: u8 = digits.parse().ok()?;
                if k >= 12 {
                    return None;
                }
                DeviceAtom::Transposition(k)
            }
        })
    }

    pub fn solid(self) -> Solid {
        match self {
            DeviceAtom::Octahedral => Solid::Octahedron,
            _ => Solid::Icosahedron,
        }
    }

    pub fn build(self, scale: &Scale) -> Device {
        match self {
            DeviceAtom::FrontBack => Device::front_back(),
            DeviceAtom::LowHigh => Device::low_high(),
            DeviceAtom::LeftRight => Device::left_right(),
            DeviceAtom::Octahedral => Device::octahedral(),
            DeviceAtom::Diametral => Device::diametral(),
            DeviceAtom::Transposition(k) => Device::transposition(scale, k as i64),
        }
    }
}

impl fmt::Display for DeviceAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeviceAtom::FrontBack => f.write_str("fb"),
            DeviceAtom::LowHigh => f.write_str("lh"),
            DeviceAtom::LeftRight => f.write_str("lr"),
            DeviceAtom::Octahedral => f.write_str("octa"),
            DeviceAtom::Diametral => f.write_str("diam"),
            DeviceAtom::Transposition(k) => write!(f, "T{k}"),
        }
    }
}

/// A parsed device expression, not yet bound to a scale.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeviceExpr {
    atoms: Vec<DeviceAtom>,
}

impl DeviceExpr {
    pub fn parse(text: &str) -> Result<DeviceExpr, ParseError> {
        Self::parse_at(text, 1, 1)
    }

    fn parse_at(text: &str, line: usize, col: usize) -> Result<DeviceExpr, ParseError> {
        let trimmed = text.trim();
        let lead = text[..text.len() - text.trim_start().len()].chars().count();
        if trimmed.is_empty() {
            return Err(ParseError::new(
                ParseErrorKind::Empty,
                line,
                col,
                "expected a device expression",
            ));
        }
        let mut atoms = Vec::new();
        let mut offset = col + lead;
        for (i, word) in trimmed.split('.').enumerate() {
            let atom = DeviceAtom::parse(word).ok_or_else(|| {
                let shown = if word.is_empty() { "<empty>" } else { word };
                ParseError::new(
                    ParseErrorKind::UnknownDevice,
                    line,
                    offset,
                    format!(
                        "unknown device `{shown}` (atom {}); expected fb, lh, lr, octa, diam or T0..T11",
                        i + 1
                    ),
                )
                .at_token(i + 1)
            })?;
            atoms.push(atom);
            offset += word.chars().count() + 1;
        }
        Ok(DeviceExpr { atoms })
    }

    pub fn atoms(&self) -> &[DeviceAtom] {
        &self.atoms
    }

    /// Composes the atoms left to right. `scale` is used by transpositions.
    pub fn build(&self, scale: &Scale) -> Result<Device, Error> {
        let mut atoms = self.atoms.iter();
        let first = atoms
            .next()
            .expect("parsed expressions are nonempty")
            .build(scale);
        atoms.try_fold(first, |acc, atom| compose_devices(&acc, &atom.build(scale)))
    }
}

impl fmt::Display for DeviceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.atoms.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// Parses and builds a device expression; transpositions use the bundled
/// default scale.
pub fn parse_device_expr(text: &str) -> Result<Device, Error> {
    let library = ScaleLibrary::bundled();
    let scale = library.default_scale().expect("bundled config has a scale");
    parse_device_expr_with(text, scale)
}

pub fn parse_device_expr_with(text: &str, scale: &Scale) -> Result<Device, Error> {
    DeviceExpr::parse(text)?.build(scale)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Statement {
    Seq {
        name: String,
        sequence: MovementSequence,
    },
    Form {
        name: String,
        scale: String,
        scale_col: usize,
        positions: Vec<usize>,
    },
    Apply {
        expr: DeviceExpr,
        expr_col: usize,
        source: String,
        target: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScriptLine {
    pub line: usize,
    pub statement: Statement,
}

/// A parsed script whose names are unique and declared before use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Script {
    statements: Vec<ScriptLine>,
}

/// A value bound to a name while running a script.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Sequence(MovementSequence),
    Form { form: TraceForm, scale: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Binding {
    pub name: String,
    pub value: Value,
}

impl fmt::Display for Binding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Sequence(s) => write!(f, "seq {} = {s}", self.name),
            Value::Form { form, scale } => write!(f, "form {} @ {scale} = {form}", self.name),
        }
    }
}

fn is_identifier(word: &str) -> bool {
    let mut chars = word.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
}

fn expect_word(
    words: &[(usize, &str)],
    index: usize,
    expected: &str,
    line: usize,
    end_col: usize,
) -> Result<(), ParseError> {
    match words.get(index) {
        Some(&(_, w)) if w == expected => Ok(()),
        Some(&(col, w)) => Err(ParseError::new(
            ParseErrorKind::Syntax,
            line,
            col,
            format!("expected `{expected}`, found `{w}`"),
        )),
        None => Err(ParseError::new(
            ParseErrorKind::Syntax,
            line,
            end_col,
            format!("expected `{expected}`"),
        )),
    }
}

fn expect_name(
    words: &[(usize, &str)],
    index: usize,
    line: usize,
    end_col: usize,
) -> Result<String, ParseError> {
    match words.get(index) {
        Some(&(_, w)) if is_identifier(w) => Ok(w.to_string()),
        Some(&(col, w)) => Err(ParseError::new(
            ParseErrorKind::Syntax,
            line,
            col,
            format!("`{w}` is not a valid name"),
        )),
        None => Err(ParseError::new(
            ParseErrorKind::Syntax,
            line,
            end_col,
            "expected a name",
        )),
    }
}

impl Script {
    pub fn parse(text: &str) -> Result<Script, ParseError> {
        let mut statements = Vec::new();
        let mut declared: HashMap<String, usize> = HashMap::new();

        for (index, raw) in text.lines().enumerate() {
            let line = index + 1;
            let content = raw.split('#').next().unwrap_or("");
            let ws = words(content);
            let end_col = content.chars().count() + 1;
            let Some(&(keyword_col, keyword)) = ws.first() else {
                continue;
            };

            let declare = |declared: &mut HashMap<String, usize>, name: &str, col: usize| {
                if let Some(previous) = declared.insert(name.to_string(), line) {
                    return Err(ParseError::new(
                        ParseErrorKind::DuplicateName,
                        line,
                        col,
                        format!("`{name}` is already declared on line {previous}"),
                    ));
                }
                Ok(())
            };

            let statement = match keyword {
                "seq" => {
                    let name = expect_name(&ws, 1, line, end_col)?;
                    expect_word(&ws, 2, "=", line, end_col)?;
                    let sequence = parse_sequence_words(&ws[3..], line, end_col)?;
                    declare(&mut declared, &name, ws[1].0)?;
                    Statement::Seq { name, sequence }
                }
                "form" => {
                    let name = expect_name(&ws, 1, line, end_col)?;
                    expect_word(&ws, 2, "@", line, end_col)?;
                    let scale = expect_name(&ws, 3, line, end_col)?;
                    expect_word(&ws, 4, "=", line, end_col)?;
                    let rest = ws.get(5..).unwrap_or(&[]);
                    if rest.is_empty() {
                        return Err(ParseError::new(
                            ParseErrorKind::Empty,
                            line,
                            end_col,
                            "expected clock positions",
                        ));
                    }
                    let positions = rest
                        .iter()
                        .enumerate()
                        .map(|(i, &(col, w))| match w.parse::<usize>() {
                            Ok(v) if v < 12 && w.bytes().all(|b| b.is_ascii_digit()) => Ok(v),
                            _ => Err(ParseError::new(
                                ParseErrorKind::Syntax,
                                line,
                                col,
                                format!("`{w}` is not a clock position 0..11 (token {})", i + 1),
                            )
                            .at_token(i + 1)),
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    declare(&mut declared, &name, ws[1].0)?;
                    Statement::Form {
                        name,
                        scale,
                        scale_col: ws[3].0,
                        positions,
                    }
                }
                "apply" => {
                    let &(expr_col, expr_text) = ws.get(1).ok_or_else(|| {
                        ParseError::new(
                            ParseErrorKind::Syntax,
                            line,
                            end_col,
                            "expected a device expression",
                        )
                    })?;
                    let expr = DeviceExpr::parse_at(expr_text, line, expr_col)?;
                    let source = expect_name(&ws, 2, line, end_col)?;
                    expect_word(&ws, 3, "->", line, end_col)?;
                    let target = expect_name(&ws, 4, line, end_col)?;
                    if let Some(&(col, w)) = ws.get(5) {
                        return Err(ParseError::new(
                            ParseErrorKind::Syntax,
                            line,
                            col,
                            format!("unexpected `{w}`"),
                        ));
                    }
                    if !declared.contains_key(&source) {
                        return Err(ParseError::new(
                            ParseErrorKind::UndeclaredName,
                            line,
                            ws[2].0,
                            format!("`{source}` is not declared"),
                        ));
                    }
                    declare(&mut declared, &target, ws[4].0)?;
                    Statement::Apply {
                        expr,
                        expr_col,
                        source,
                        target,
                    }
                }
                other => {
                    return Err(ParseError::new(
                        ParseErrorKind::Syntax,
                        line,
                        keyword_col,
                        format!("unknown statement `{other}`; expected seq, form or apply"),
                    ))
                }
            };
            statements.push(ScriptLine { line, statement });
        }
        Ok(Script { statements })
    }

    pub fn statements(&self) -> &[ScriptLine] {
        &self.statements
    }

    /// Evaluates every statement, returning bindings in declaration order.
    ///
    /// Transpositions applied to sequences use the library's default scale;
    /// applied to trace forms they use the form's own scale.
    pub fn run(&self, library: &ScaleLibrary) -> Result<Vec<Binding>, ParseError> {
        let mut bindings: Vec<Binding> = Vec::new();
        for ScriptLine { line, statement } in &self.statements {
            let line = *line;
            let eval_error =
                |col: usize, e: Error| ParseError::new(ParseErrorKind::Evaluation, line, col, e.to_string());
            let binding = match statement {
                Statement::Seq { name, sequence } => Binding {
                    name: name.clone(),
                    value: Value::Sequence(sequence.clone()),
                },
                Statement::Form {
                    name,
                    scale,
                    scale_col,
                    positions,
                } => {
                    library.scale(scale).map_err(|e| eval_error(*scale_col, e))?;
                    let form = TraceForm::from_values(name.clone(), positions)
                        .map_err(|e| eval_error(*scale_col, e))?;
                    Binding {
                        name: name.clone(),
                        value: Value::Form {
                            form,
                            scale: scale.clone(),
                        },
                    }
                }
                Statement::Apply {
                    expr,
                    expr_col,
                    source,
                    target,
                } => {
                    let value = &bindings
                        .iter()
                        .find(|b| &b.name == source)
                        .expect("checked at parse")
                        .value;
                    let value = match value {
                        Value::Sequence(seq) => {
                            let scale = library.default_scale().ok_or_else(|| {
                                eval_error(*expr_col, Error::Config("no scale loaded".into()))
                            })?;
                            let device = expr.build(scale).map_err(|e| eval_error(*expr_col, e))?;
                            Value::Sequence(device.apply_sequence(seq).map_err(|e| eval_error(*expr_col, e))?)
                        }
                        Value::Form { form, scale } => {
                            let scale_value = library.scale(scale).map_err(|e| eval_error(*expr_col, e))?;
                            let device = expr.build(scale_value).map_err(|e| eval_error(*expr_col, e))?;
                            let out = apply_device_on_clock(scale_value, &device, form)
                                .map_err(|e| eval_error(*expr_col, e))?;
                            Value::Form {
                                form: out.renamed(target.clone()),
                                scale: scale.clone(),
                            }
                        }
                    };
                    Binding {
                        name: target.clone(),
                        value,
                    }
                }
            };
            bindings.push(binding);
        }
        Ok(bindings)
    }
}
