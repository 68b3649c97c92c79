use std::fs;
use std::path::Path;

use super::lexer::tokenize;
use super::parser::parse_statement_at;
use super::repl::split_statements;
use super::LangError;

/// Rewrites every statement of `src` into canonical core text, one line per
/// statement. Blank and comment-only lines pass through; a trailing comment
/// on a statement is kept after it.
pub fn translate(src: &str) -> Result<String, LangError> {
    let mut out = String::new();
    for chunk in split_statements(src) {
        if !chunk.is_code {
            out.push_str(chunk.text.trim_end());
            out.push('\n');
            continue;
        }
        let stmt = parse_statement_at(&chunk.text, chunk.line)?.lower();
        out.push_str(&stmt.to_string());
        if let Ok((_, Some(comment))) = tokenize(&chunk.text) {
            out.push_str(" --");
            if !comment.is_empty() {
                out.push(' ');
                out.push_str(&comment);
            }
        }
        out.push('\n');
    }
    Ok(out)
}

/// Like [`translate`], with errors rendered as `NAME:line:col: message`.
pub fn preprocess(original_name: &str, src: &str) -> Result<String, String> {
    translate(src).map_err(|e| match e {
        LangError::Syntax { pos, msg } => format!("{original_name}:{pos}: {msg}"),
        other => format!("{original_name}: {other}"),
    })
}

/// The three-argument preprocessor entry point: reads `input`, writes the
/// canonical text to `output`, and reports errors against `original_name`.
pub fn preprocess_file(original_name: &str, input: &Path, output: &Path) -> Result<(), String> {
    let src = fs::read_to_string(input).map_err(|e| format!("{}: {e}", input.display()))?;
    let text = preprocess(original_name, &src)?;
    fs::write(output, text).map_err(|e| format!("{}: {e}", output.display()))
}
