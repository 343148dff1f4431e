use std::io::Read;
use std::path::Path;

use palinform::{Error, Result};
use serde_json::Value;

/// Inline JSON, a path to a JSON file, or `-` for stdin.
pub fn load(arg: &str) -> Result<Value> {
    let text = if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Io(format!("stdin: {e}")))?;
        s
    } else if let Ok(v) = serde_json::from_str(arg) {
        return Ok(v);
    } else if Path::new(arg).is_file() {
        std::fs::read_to_string(arg).map_err(|e| Error::Io(format!("{arg}: {e}")))?
    } else {
        return Err(Error::Parse(format!("neither JSON nor a readable file: {arg}")));
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))
}

/// Bare JSON scalars on the command line may be given without quotes.
pub fn scalar(arg: &str) -> Value {
    serde_json::from_str(arg).unwrap_or_else(|_| Value::String(arg.to_string()))
}
