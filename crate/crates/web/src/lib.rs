//! Browser bindings: an evaluation session, the source translator and the
//! Caesar cipher.

use mdsl_core::apps::cipher::{self, Mode};
use mdsl_core::frontend::{self, Interpreter, Repl};
use wasm_bindgen::prelude::*;

/// A REPL session that keeps its `let` bindings between calls.
#[wasm_bindgen]
pub struct Session {
    repl: Repl,
}

#[wasm_bindgen]
impl Session {
    #[wasm_bindgen(constructor)]
    pub fn new(seed: u32) -> Session {
        Session { repl: Repl::new(Interpreter::with_seed(u64::from(seed)), "") }
    }

    /// Evaluates one statement. Bindings print nothing; errors come back as text.
    pub fn eval(&mut self, line: &str) -> String {
        self.repl.eval_line(line, 1).unwrap_or_default()
    }
}

/// Canonical core text for a whole source, or the first syntax error.
#[wasm_bindgen]
pub fn translate(src: &str) -> Result<String, JsValue> {
    frontend::preprocess("input", src).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn caesar(text: &str, decipher: bool) -> Result<String, JsValue> {
    let mode = if decipher { Mode::Decipher } else { Mode::Encipher };
    cipher::caesar(mode, text).map_err(|e| JsValue::from_str(&e.to_string()))
}
