use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use super::CobwebError;

/// A rule giving the number of vertices `F_s ≥ 1` on each level `s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LevelSequence {
    /// `1, 1, 1, 2, 3, 5, 8, …`: Fibonacci numbers with the leading zero
    /// replaced by one.
    Fibonacci,
    Constant(u64),
    /// `F_s = s + 1`.
    Natural,
    /// Explicit finite prefix; the first value is `F_0`.
    Custom(Vec<u64>),
}

impl LevelSequence {
    pub fn constant(k: u64) -> Result<Self, CobwebError> {
        if k == 0 {
            return Err(CobwebError::InvalidSequence(
                "constant level size must be at least 1".into(),
            ));
        }
        Ok(LevelSequence::Constant(k))
    }

    pub fn custom(values: Vec<u64>) -> Result<Self, CobwebError> {
        if let Some(level) = values.iter().position(|&f| f == 0) {
            return Err(CobwebError::InvalidSequence(format!(
                "level {level} has size 0"
            )));
        }
        Ok(LevelSequence::Custom(values))
    }

    /// Resolves a spec string, reading the file for `file:<path>`.
    pub fn parse(spec: &str) -> Result<Self, CobwebError> {
        spec.parse::<SequenceSpec>()?.load()
    }

    /// `F_level`.
    pub fn size(&self, level: usize) -> Result<u64, CobwebError> {
        match self {
            LevelSequence::Fibonacci => {
                fibonacci_level(level).ok_or(CobwebError::Overflow { level })
            }
            LevelSequence::Constant(k) => Ok(*k),
            LevelSequence::Natural => u64::try_from(level)
                .ok()
                .and_then(|s| s.checked_add(1))
                .ok_or(CobwebError::Overflow { level }),
            LevelSequence::Custom(values) => {
                values
                    .get(level)
                    .copied()
                    .ok_or(CobwebError::SequenceExhausted {
                        level,
                        len: values.len(),
                    })
            }
        }
    }
}

impl fmt::Display for LevelSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LevelSequence::Fibonacci => f.write_str("fib"),
            LevelSequence::Constant(k) => write!(f, "const:{k}"),
            LevelSequence::Natural => f.write_str("nat"),
            LevelSequence::Custom(values) => {
                f.write_str("custom:")?;
                for (i, v) in values.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{v}")?;
                }
                Ok(())
            }
        }
    }
}

fn fibonacci_level(level: usize) -> Option<u64> {
    if level == 0 {
        return Some(1);
    }
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 1..level {
        let next = a.checked_add(b)?;
        a = b;
        b = next;
    }
    Some(b)
}

/// A parsed `fib | const:<k> | nat | file:<path>` spec. Parsing is pure;
/// the file is only read by [`SequenceSpec::load`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SequenceSpec {
    Builtin(LevelSequence),
    File(PathBuf),
}

impl SequenceSpec {
    pub fn load(self) -> Result<LevelSequence, CobwebError> {
        match self {
            SequenceSpec::Builtin(seq) => Ok(seq),
            SequenceSpec::File(path) => {
                let text = std::fs::read_to_string(&path).map_err(|e| CobwebError::Io {
                    path: path.display().to_string(),
                    message: e.to_string(),
                })?;
                LevelSequence::custom(parse_sequence_values(&text)?)
            }
        }
    }
}

impl FromStr for SequenceSpec {
    type Err = CobwebError;

    fn from_str(spec: &str) -> Result<Self, CobwebError> {
        let spec = spec.trim();
        match spec {
            "fib" => return Ok(SequenceSpec::Builtin(LevelSequence::Fibonacci)),
            "nat" => return Ok(SequenceSpec::Builtin(LevelSequence::Natural)),
            _ => {}
        }
        if let Some(k) = spec.strip_prefix("const:") {
            let k: u64 = k
                .parse()
                .map_err(|_| CobwebError::Parse(format!("bad constant {k:?} in {spec:?}")))?;
            return LevelSequence::constant(k).map(SequenceSpec::Builtin);
        }
        if let Some(path) = spec.strip_prefix("file:") {
            if path.is_empty() {
                return Err(CobwebError::Parse("empty path in file: spec".into()));
            }
            return Ok(SequenceSpec::File(PathBuf::from(path)));
        }
        Err(CobwebError::Parse(format!(
            "unknown sequence {spec:?}; expected fib, nat, const:<k> or file:<path>"
        )))
    }
}

/// Level sizes from whitespace-separated ASCII decimal positive integers.
pub fn parse_sequence_values(text: &str) -> Result<Vec<u64>, CobwebError> {
    let values = text
        .split_ascii_whitespace()
        .map(|tok| {
            if !tok.bytes().all(|b| b.is_ascii_digit()) {
                return Err(CobwebError::Parse(format!(
                    "not a decimal integer: {tok:?}"
                )));
            }
            tok.parse::<u64>()
                .map_err(|e| CobwebError::Parse(format!("{tok:?}: {e}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if values.is_empty() {
        return Err(CobwebError::Parse("sequence file lists no levels".into()));
    }
    if let Some(level) = values.iter().position(|&f| f == 0) {
        return Err(CobwebError::InvalidSequence(format!(
            "level {level} has size 0"
        )));
    }
    Ok(values)
}
