//! C interface to the legalc compiler.
//!
//! Every entry point that takes an out-parameter hands back an owned
//! [`LegalcCompilation`] whenever that pointer is non-null, even on failure,
//! so callers can always read the status and messages and must always free
//! it with [`legalc_compilation_free`]. Panics never cross the boundary.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use legalc_core::codegen::EmitConfig;
use legalc_core::normalize::to_western_digits;
use legalc_core::{compile, validate, CompileError};

/// Result of a call. Values match the command line's exit codes where they
/// overlap.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LegalcStatus {
    Ok = 0,
    /// The document does not follow the grammar.
    Rejected = 1,
    /// The bytes are not valid UTF-8 or contain characters XML cannot carry.
    InvalidInput = 2,
    NullArgument = 3,
    InvalidOption = 4,
    /// An internal error; the message holds the panic text.
    Panic = 5,
}

/// Output settings. `root_tag` may be NULL for the default.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct LegalcEmitOptions {
    pub root_tag: *const c_char,
    pub indent: u32,
    pub xml_declaration: bool,
}

/// Outcome of a compile or validate call. Opaque to C.
pub struct LegalcCompilation {
    status: LegalcStatus,
    output: Option<CString>,
    diagnostics: Vec<CString>,
}

impl LegalcCompilation {
    fn failed(status: LegalcStatus, message: impl Into<String>) -> LegalcCompilation {
        LegalcCompilation {
            status,
            output: None,
            diagnostics: vec![c_string(message.into())],
        }
    }
}

/// Interior NULs cannot occur in accepted text, but messages are built from
/// arbitrary input, so they are replaced rather than trusted.
fn c_string(s: String) -> CString {
    CString::new(s).unwrap_or_else(|e| {
        let cleaned = String::from_utf8_lossy(&e.into_vec()).replace('\0', "\u{FFFD}");
        CString::new(cleaned).expect("NULs removed")
    })
}

fn panic_message(p: Box<dyn std::any::Any + Send>) -> String {
    p.downcast_ref::<&str>()
        .map(|s| s.to_string())
        .or_else(|| p.downcast_ref::<String>().cloned())
        .unwrap_or_else(|| "internal error".into())
}

unsafe fn source_name<'a>(name: *const c_char) -> Result<&'a str, LegalcCompilation> {
    if name.is_null() {
        return Ok("<input>");
    }
    CStr::from_ptr(name).to_str().map_err(|_| {
        LegalcCompilation::failed(LegalcStatus::InvalidOption, "source name is not UTF-8")
    })
}

unsafe fn input_bytes<'a>(input: *const u8, len: usize) -> Result<&'a [u8], LegalcCompilation> {
    match (input.is_null(), len) {
        (true, 0) => Ok(&[]),
        (true, _) => Err(LegalcCompilation::failed(
            LegalcStatus::NullArgument,
            "input is NULL",
        )),
        (false, _) => Ok(std::slice::from_raw_parts(input, len)),
    }
}

unsafe fn emit_config(options: *const LegalcEmitOptions) -> Result<EmitConfig, LegalcCompilation> {
    let Some(o) = options.as_ref() else {
        return Ok(EmitConfig::default());
    };
    let root = if o.root_tag.is_null() {
        EmitConfig::default().root_tag().to_string()
    } else {
        CStr::from_ptr(o.root_tag)
            .to_str()
            .map_err(|_| {
                LegalcCompilation::failed(LegalcStatus::InvalidOption, "root tag is not UTF-8")
            })?
            .to_string()
    };
    EmitConfig::new(&root, o.indent as usize, o.xml_declaration)
        .map_err(|e| LegalcCompilation::failed(LegalcStatus::InvalidOption, e.to_string()))
}

fn from_error(e: CompileError) -> LegalcCompilation {
    match e {
        CompileError::Decode(d) => {
            LegalcCompilation::failed(LegalcStatus::InvalidInput, d.to_string())
        }
        CompileError::Rejected(r) => LegalcCompilation {
            status: LegalcStatus::Rejected,
            output: None,
            diagnostics: r
                .diagnostics
                .iter()
                .map(|d| c_string(legalc_core::diagnostic::render_diagnostic(d, &r.text)))
                .collect(),
        },
    }
}

/// Runs `f` behind `catch_unwind` and stores its result in `out`.
unsafe fn deliver(
    out: *mut *mut LegalcCompilation,
    f: impl FnOnce() -> LegalcCompilation,
) -> LegalcStatus {
    if out.is_null() {
        return LegalcStatus::NullArgument;
    }
    let c = catch_unwind(AssertUnwindSafe(f))
        .unwrap_or_else(|p| LegalcCompilation::failed(LegalcStatus::Panic, panic_message(p)));
    let status = c.status;
    *out = Box::into_raw(Box::new(c));
    status
}

/// Default output settings: root `document`, indent 2, XML declaration on.
#[no_mangle]
pub extern "C" fn legalc_emit_options_default() -> LegalcEmitOptions {
    let d = EmitConfig::default();
    LegalcEmitOptions {
        root_tag: ptr::null(),
        indent: d.indent() as u32,
        xml_declaration: d.xml_declaration(),
    }
}

/// Compiles `len` bytes at `input` to XML.
///
/// # Safety
/// `input` must point to `len` readable bytes (it may be NULL when `len` is
/// 0). `source_name` and `options` may be NULL; otherwise they must point to
/// a NUL-terminated string and a valid options struct. `out` must be NULL or
/// writable.
#[no_mangle]
pub unsafe extern "C" fn legalc_compile(
    input: *const u8,
    len: usize,
    source_name: *const c_char,
    options: *const LegalcEmitOptions,
    out: *mut *mut LegalcCompilation,
) -> LegalcStatus {
    deliver(out, || {
        let run = || -> Result<LegalcCompilation, LegalcCompilation> {
            let raw = input_bytes(input, len)?;
            let name = self::source_name(source_name)?;
            let cfg = emit_config(options)?;
            let xml = compile(raw, name, &cfg).map_err(from_error)?;
            Ok(LegalcCompilation {
                status: LegalcStatus::Ok,
                output: Some(c_string(
                    String::from_utf8(xml).expect("serializer writes UTF-8"),
                )),
                diagnostics: Vec::new(),
            })
        };
        run().unwrap_or_else(|e| e)
    })
}

/// Checks `input` against the grammar without producing output.
///
/// # Safety
/// As for [`legalc_compile`].
#[no_mangle]
pub unsafe extern "C" fn legalc_validate(
    input: *const u8,
    len: usize,
    source_name: *const c_char,
    out: *mut *mut LegalcCompilation,
) -> LegalcStatus {
    deliver(out, || {
        let run = || -> Result<LegalcCompilation, LegalcCompilation> {
            let raw = input_bytes(input, len)?;
            let name = self::source_name(source_name)?;
            validate(raw, name).map_err(from_error)?;
            Ok(LegalcCompilation {
                status: LegalcStatus::Ok,
                output: None,
                diagnostics: Vec::new(),
            })
        };
        run().unwrap_or_else(|e| e)
    })
}

/// # Safety
/// `c` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn legalc_compilation_status(c: *const LegalcCompilation) -> LegalcStatus {
    c.as_ref().map_or(LegalcStatus::NullArgument, |c| c.status)
}

/// The NUL-terminated XML, or NULL if there is none. Its byte length, without
/// the terminator, goes to `len` when that is non-null. Owned by `c`.
///
/// # Safety
/// `c` must be NULL or a live handle; `len` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn legalc_compilation_output(
    c: *const LegalcCompilation,
    len: *mut usize,
) -> *const c_char {
    let out = c.as_ref().and_then(|c| c.output.as_ref());
    if let Some(len) = len.as_mut() {
        *len = out.map_or(0, |s| s.as_bytes().len());
    }
    out.map_or(ptr::null(), |s| s.as_ptr())
}

/// Number of rendered messages.
///
/// # Safety
/// `c` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn legalc_compilation_diagnostic_count(c: *const LegalcCompilation) -> usize {
    c.as_ref().map_or(0, |c| c.diagnostics.len())
}

/// Message `index` rendered with its source excerpt, or NULL when out of
/// range. Owned by `c`.
///
/// # Safety
/// `c` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn legalc_compilation_diagnostic(
    c: *const LegalcCompilation,
    index: usize,
) -> *const c_char {
    c.as_ref()
        .and_then(|c| c.diagnostics.get(index))
        .map_or(ptr::null(), |s| s.as_ptr())
}

/// # Safety
/// `c` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn legalc_compilation_free(c: *mut LegalcCompilation) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Copy of `text` with Arabic-Indic digits replaced by ASCII ones, or NULL if
/// `text` is NULL or not UTF-8. Free with [`legalc_string_free`].
///
/// # Safety
/// `text` must be NULL or a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn legalc_to_western_digits(text: *const c_char) -> *mut c_char {
    if text.is_null() {
        return ptr::null_mut();
    }
    match CStr::from_ptr(text).to_str() {
        Ok(s) => c_string(to_western_digits(s)).into_raw(),
        Err(_) => ptr::null_mut(),
    }
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn legalc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn legalc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
