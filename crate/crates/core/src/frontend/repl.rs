use std::io::{self, BufRead, Write};

use super::eval::Interpreter;
use super::parser::parse_statement_at;
use super::LangError;

/// A group of source lines: either one statement or a line with no code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chunk {
    /// 1-based line of the first line in the chunk.
    pub line: usize,
    pub text: String,
    pub is_code: bool,
}

/// Bracket depth change over one line, ignoring strings and comments.
fn depth_delta(line: &str) -> i64 {
    let mut depth = 0;
    let mut in_str = false;
    let mut chars = line.chars().peekable();
    while let Some(c) = chars.next() {
        if in_str {
            match c {
                '\\' => {
                    chars.next();
                }
                '"' => in_str = false,
                _ => {}
            }
            continue;
        }
        match c {
            '"' => in_str = true,
            '-' if chars.peek() == Some(&'-') => break,
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            _ => {}
        }
    }
    depth
}

fn is_code(line: &str) -> bool {
    let t = line.trim();
    !t.is_empty() && !t.starts_with("--")
}

/// Groups lines into statements. A statement continues onto following lines
/// while its brackets are open.
pub fn split_statements(src: &str) -> Vec<Chunk> {
    let mut out = Vec::new();
    let mut open: Option<(Chunk, i64)> = None;
    for (i, line) in src.lines().enumerate() {
        let n = i + 1;
        match open.take() {
            Some((mut chunk, depth)) => {
                chunk.text.push('\n');
                chunk.text.push_str(line);
                let depth = depth + depth_delta(line);
                if depth > 0 {
                    open = Some((chunk, depth));
                } else {
                    out.push(chunk);
                }
            }
            None if !is_code(line) => out.push(Chunk { line: n, text: line.to_string(), is_code: false }),
            None => {
                let chunk = Chunk { line: n, text: line.to_string(), is_code: true };
                let depth = depth_delta(line);
                if depth > 0 {
                    open = Some((chunk, depth));
                } else {
                    out.push(chunk);
                }
            }
        }
    }
    out.extend(open.map(|(c, _)| c));
    out
}

/// Interactive read-eval-print loop over arbitrary streams.
#[derive(Debug, Clone)]
pub struct Repl {
    pub interp: Interpreter,
    pub prompt: String,
}

impl Repl {
    pub fn new(interp: Interpreter, prompt: impl Into<String>) -> Self {
        Repl { interp, prompt: prompt.into() }
    }

    /// Evaluates one statement and renders the reply, if any.
    pub fn eval_line(&mut self, src: &str, line: usize) -> Option<String> {
        let result = parse_statement_at(src, line).and_then(|stmt| self.interp.exec(&stmt));
        match result {
            Ok(Some(v)) => Some(v.to_string()),
            Ok(None) => None,
            Err(e) => Some(format!("error: {e}")),
        }
    }

    /// Runs until the input ends. Errors are printed and the session goes on.
    pub fn run(&mut self, input: impl BufRead, mut output: impl Write) -> io::Result<()> {
        let mut pending = String::new();
        let mut depth = 0;
        let mut line_no = 0;
        let mut start = 1;
        write!(output, "{}", self.prompt)?;
        output.flush()?;
        for line in input.lines() {
            let line = line?;
            line_no += 1;
            if pending.is_empty() {
                if !is_code(&line) {
                    write!(output, "{}", self.prompt)?;
                    output.flush()?;
                    continue;
                }
                start = line_no;
            } else {
                pending.push('\n');
            }
            pending.push_str(&line);
            depth += depth_delta(&line);
            if depth > 0 {
                continue;
            }
            if let Some(reply) = self.eval_line(&pending, start) {
                writeln!(output, "{reply}")?;
            }
            pending.clear();
            depth = 0;
            write!(output, "{}", self.prompt)?;
            output.flush()?;
        }
        if !pending.is_empty() {
            if let Some(reply) = self.eval_line(&pending, start) {
                writeln!(output, "{reply}")?;
            }
        }
        Ok(())
    }
}

/// Runs every statement of a source file, handing each rendered result to
/// `emit`. Stops at the first error, which carries the statement's line.
pub fn run_source(interp: &mut Interpreter, src: &str, mut emit: impl FnMut(String)) -> Result<(), (usize, LangError)> {
    for chunk in split_statements(src).into_iter().filter(|c| c.is_code) {
        let stmt = parse_statement_at(&chunk.text, chunk.line).map_err(|e| (chunk.line, e))?;
        if let Some(v) = interp.exec(&stmt).map_err(|e| (chunk.line, e))? {
            emit(v.to_string());
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn session(input: &str) -> String {
        let mut repl = Repl::new(Interpreter::new(), "");
        let mut out = Vec::new();
        repl.run(input.as_bytes(), &mut out).unwrap();
        String::from_utf8(out).unwrap()
    }

    #[test]
    fn bindings_persist_and_errors_continue() {
        let out = session("let x = Set [1,2,3]\nx\nfoo\nunion x (Set {4})\n");
        let lines: Vec<_> = out.lines().collect();
        assert_eq!(lines[0], "{1,2,3}");
        assert!(lines[1].starts_with("error: unbound"));
        assert_eq!(lines[2], "{1,2,3,4}");
    }

    #[test]
    fn statements_span_open_brackets() {
        let src = "-- head\nlet m = Matrix [[1,2],\n   [3,4]] -- tail\n\nnumRows m\n";
        let chunks = split_statements(src);
        assert_eq!(chunks.len(), 4);
        assert_eq!((chunks[1].line, chunks[1].is_code), (2, true));
        assert!(chunks[1].text.ends_with("-- tail"));
        assert_eq!(session(src), "2\n");
        assert_eq!(depth_delta("f \"(\" -- ("), 0);
    }

    #[test]
    fn run_source_reports_line() {
        let mut ip = Interpreter::new();
        let mut out = Vec::new();
        assert_eq!(run_source(&mut ip, "1 + 1\n\nnot 2\n", |l| out.push(l)).unwrap_err().0, 3);
        run_source(&mut ip, "let a = 2\na * 3", |l| out.push(l)).unwrap();
        assert_eq!(out, vec!["2", "6"]);
    }
}
