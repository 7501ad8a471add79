//! Book validation: every model invariant becomes a coded rule.
//!
//! Violations are data, not failures — [`validate_book`] always succeeds
//! and returns a [`ValidationReport`] whose `errors` list is empty exactly
//! when the book satisfies all MUST invariants. Softer defects (missing
//! character identity, payload fields on an unexpected class) are reported
//! as warnings.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::model::{AnnotationClass, UcaBook};
use crate::Coord;

/// Fraction of a page dimension a vertex may overshoot before the
/// out-of-page defect escalates from warning to error.
pub const DEFAULT_OOB_TOLERANCE: Coord = 0.005;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleCode {
    /// Duplicate character id in the book roster.
    DupCharId,
    /// Roster entry with an empty name.
    EmptyCharName,
    /// Page indices not strictly increasing from 0.
    PageIndexOrder,
    /// Page width or height is zero.
    BadPageDims,
    /// Duplicate annotation id within one page.
    DupAnnId,
    /// Polygon vertex outside the page bounds (warning within tolerance).
    OutOfPage,
    /// `charid` does not resolve in the book roster.
    DanglingCharRef,
    /// Truncation group with fewer than two onomatopoeia members on a page.
    TruncGroupSingleton,
    /// Speaker link whose text id is missing or not a text annotation.
    LinkTextUnresolved,
    /// Speaker link whose speaker id is missing from the roster.
    LinkSpeakerUnresolved,
    /// Character/face annotation without a roster reference (warning).
    MissingCharRef,
    /// Payload field present on a class it does not belong to (warning).
    FieldClassMismatch,
}

impl RuleCode {
    pub fn as_str(self) -> &'static str {
        match self {
            RuleCode::DupCharId => "DUP_CHAR_ID",
            RuleCode::EmptyCharName => "EMPTY_CHAR_NAME",
            RuleCode::PageIndexOrder => "PAGE_INDEX_ORDER",
            RuleCode::BadPageDims => "BAD_PAGE_DIMS",
            RuleCode::DupAnnId => "DUP_ANN_ID",
            RuleCode::OutOfPage => "OUT_OF_PAGE",
            RuleCode::DanglingCharRef => "DANGLING_CHAR_REF",
            RuleCode::TruncGroupSingleton => "TRUNC_GROUP_SINGLETON",
            RuleCode::LinkTextUnresolved => "LINK_TEXT_UNRESOLVED",
            RuleCode::LinkSpeakerUnresolved => "LINK_SPEAKER_UNRESOLVED",
            RuleCode::MissingCharRef => "MISSING_CHAR_REF",
            RuleCode::FieldClassMismatch => "FIELD_CLASS_MISMATCH",
        }
    }
}

impl fmt::Display for RuleCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One violated rule. `page` is `None` for book-level defects,
/// `ann_id` is `None` for page-level ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationIssue {
    pub page: Option<u32>,
    pub ann_id: Option<String>,
    pub rule: RuleCode,
    pub message: String,
}

impl ValidationIssue {
    fn sort_key(&self) -> (u32, u8, &str, RuleCode) {
        // Book-level first, then page order, then annotation id, then rule.
        let page = self.page.map_or(0, |p| p + 1);
        let has_ann = u8::from(self.ann_id.is_some());
        (page, has_ann, self.ann_id.as_deref().unwrap_or(""), self.rule)
    }
}

impl fmt::Display for ValidationIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let page = self.page.map_or_else(|| "-".to_string(), |p| p.to_string());
        let ann = self.ann_id.as_deref().unwrap_or("-");
        write!(f, "page {page} ann {ann} {}: {}", self.rule, self.message)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub errors: Vec<ValidationIssue>,
    pub warnings: Vec<ValidationIssue>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.errors.is_empty()
    }

    pub fn has_rule(&self, rule: RuleCode) -> bool {
        self.errors.iter().chain(&self.warnings).any(|i| i.rule == rule)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ValidateOptions {
    /// Out-of-page tolerance as a fraction of the page dimension.
    pub oob_tolerance: Coord,
}

impl Default for ValidateOptions {
    fn default() -> Self {
        Self {
            oob_tolerance: DEFAULT_OOB_TOLERANCE,
        }
    }
}

/// Validate with the default out-of-page tolerance.
pub fn validate_book(book: &UcaBook) -> ValidationReport {
    validate_book_with(book, &ValidateOptions::default())
}

/// Validate every invariant; issues come back in deterministic order
/// (book-level first, then by page index, annotation id, rule code).
pub fn validate_book_with(book: &UcaBook, opts: &ValidateOptions) -> ValidationReport {
    let mut errors = Vec::new();
    let mut warnings = Vec::new();

    let mut roster_ids = BTreeSet::new();
    for ch in &book.characters {
        if !roster_ids.insert(ch.id) {
            errors.push(ValidationIssue {
                page: None,
                ann_id: None,
                rule: RuleCode::DupCharId,
                message: format!("character id {} appears more than once", ch.id),
            });
        }
        if ch.name.is_empty() {
            errors.push(ValidationIssue {
                page: None,
                ann_id: None,
                rule: RuleCode::EmptyCharName,
                message: format!("character {} has an empty name", ch.id),
            });
        }
    }

    for (pos, page) in book.pages.iter().enumerate() {
        if page.index != pos as u32 {
            errors.push(ValidationIssue {
                page: Some(page.index),
                ann_id: None,
                rule: RuleCode::PageIndexOrder,
                message: format!("page at position {pos} has index {}", page.index),
            });
        }
        if page.width == 0 || page.height == 0 {
            errors.push(ValidationIssue {
                page: Some(page.index),
                ann_id: None,
                rule: RuleCode::BadPageDims,
                message: format!("page dimensions {}x{}", page.width, page.height),
            });
        }

        let mut seen_ids = BTreeSet::new();
        let mut group_members: BTreeMap<&str, usize> = BTreeMap::new();

        for ann in &page.annotations {
            if !seen_ids.insert(ann.id.as_str()) {
                errors.push(ValidationIssue {
                    page: Some(page.index),
                    ann_id: Some(ann.id.clone()),
                    rule: RuleCode::DupAnnId,
                    message: "annotation id appears more than once on this page".into(),
                });
            }

            check_bounds(page, ann, opts, &mut errors, &mut warnings);

            match ann.char_ref {
                Some(id) if !roster_ids.contains(&id) => errors.push(ValidationIssue {
                    page: Some(page.index),
                    ann_id: Some(ann.id.clone()),
                    rule: RuleCode::DanglingCharRef,
                    message: format!("charid {id} not in the roster"),
                }),
                Some(_)
                    if !matches!(
                        ann.class,
                        AnnotationClass::Character | AnnotationClass::Face
                    ) =>
                {
                    warnings.push(ValidationIssue {
                        page: Some(page.index),
                        ann_id: Some(ann.id.clone()),
                        rule: RuleCode::FieldClassMismatch,
                        message: format!("charid on a {} annotation", ann.class),
                    })
                }
                None if matches!(
                    ann.class,
                    AnnotationClass::Character | AnnotationClass::Face
                ) =>
                {
                    warnings.push(ValidationIssue {
                        page: Some(page.index),
                        ann_id: Some(ann.id.clone()),
                        rule: RuleCode::MissingCharRef,
                        message: format!("{} annotation without a roster reference", ann.class),
                    })
                }
                _ => {}
            }

            if ann.transcription.is_some()
                && !matches!(ann.class, AnnotationClass::Text | AnnotationClass::Balloon)
            {
                warnings.push(ValidationIssue {
                    page: Some(page.index),
                    ann_id: Some(ann.id.clone()),
                    rule: RuleCode::FieldClassMismatch,
                    message: format!("transcription on a {} annotation", ann.class),
                });
            }

            if let Some(group) = &ann.truncation_group {
                if ann.class == AnnotationClass::Onomatopoeia {
                    *group_members.entry(group.as_str()).or_insert(0) += 1;
                } else {
                    warnings.push(ValidationIssue {
                        page: Some(page.index),
                        ann_id: Some(ann.id.clone()),
                        rule: RuleCode::FieldClassMismatch,
                        message: format!("truncation group on a {} annotation", ann.class),
                    });
                }
            }
        }

        for (group, count) in group_members {
            if count < 2 {
                // Attribute the defect to the lone member.
                let member = page
                    .annotations
                    .iter()
                    .find(|a| a.truncation_group.as_deref() == Some(group))
                    .expect("group has a member");
                errors.push(ValidationIssue {
                    page: Some(page.index),
                    ann_id: Some(member.id.clone()),
                    rule: RuleCode::TruncGroupSingleton,
                    message: format!("truncation group {group:?} has a single member"),
                });
            }
        }

        for link in &page.links {
            match page.annotation(&link.text_id) {
                Some(ann) if ann.class == AnnotationClass::Text => {}
                Some(ann) => errors.push(ValidationIssue {
                    page: Some(page.index),
                    ann_id: Some(link.text_id.clone()),
                    rule: RuleCode::LinkTextUnresolved,
                    message: format!("link target is a {} annotation, not text", ann.class),
                }),
                None => errors.push(ValidationIssue {
                    page: Some(page.index),
                    ann_id: Some(link.text_id.clone()),
                    rule: RuleCode::LinkTextUnresolved,
                    message: "link target id not on this page".into(),
                }),
            }
            if !roster_ids.contains(&link.speaker_char_ref) {
                errors.push(ValidationIssue {
                    page: Some(page.index),
                    ann_id: Some(link.text_id.clone()),
                    rule: RuleCode::LinkSpeakerUnresolved,
                    message: format!("speaker {} not in the roster", link.speaker_char_ref),
                });
            }
        }
    }

    errors.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    warnings.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    ValidationReport { errors, warnings }
}

fn check_bounds(
    page: &crate::model::UcaPage,
    ann: &crate::model::AnnotationObject,
    opts: &ValidateOptions,
    errors: &mut Vec<ValidationIssue>,
    warnings: &mut Vec<ValidationIssue>,
) {
    let w = page.width as Coord;
    let h = page.height as Coord;
    let tol_x = opts.oob_tolerance * w;
    let tol_y = opts.oob_tolerance * h;

    // Severity over all vertices: hard breach wins over tolerated overshoot.
    let mut any_warn = false;
    let mut first_breach: Option<(Coord, Coord)> = None;
    for &(x, y) in ann.polygon.points() {
        let hard = x < -tol_x || x > w + tol_x || y < -tol_y || y > h + tol_y;
        let soft = x < 0.0 || x > w || y < 0.0 || y > h;
        if hard {
            first_breach.get_or_insert((x, y));
        } else if soft {
            any_warn = true;
        }
    }
    if let Some((x, y)) = first_breach {
        errors.push(ValidationIssue {
            page: Some(page.index),
            ann_id: Some(ann.id.clone()),
            rule: RuleCode::OutOfPage,
            message: format!("vertex ({x},{y}) beyond {}x{} + tolerance", page.width, page.height),
        });
    } else if any_warn {
        warnings.push(ValidationIssue {
            page: Some(page.index),
            ann_id: Some(ann.id.clone()),
            rule: RuleCode::OutOfPage,
            message: format!("vertex outside {}x{} within tolerance", page.width, page.height),
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::*;
    use crate::Polygon;

    fn book_with_one_page() -> UcaBook {
        let mut book = UcaBook::new("b", SourceDataset::Other("test".into()));
        book.characters = vec![
            CharacterEntry { id: 0, name: "alice".into() },
            CharacterEntry { id: 1, name: "bob".into() },
        ];
        let mut page = UcaPage::new(0, 800, 1100);
        page.annotations.push(AnnotationObject::new(
            "p0",
            AnnotationClass::Panel,
            Polygon::from_corners(0.0, 0.0, 800.0, 1100.0),
        ));
        book.pages.push(page);
        book
    }

    #[test]
    fn valid_book_has_empty_errors() {
        let report = validate_book(&book_with_one_page());
        assert!(report.errors.is_empty(), "{:?}", report.errors);
        assert!(report.warnings.is_empty());
    }

    #[test]
    fn dangling_char_ref_is_flagged() {
        let mut book = book_with_one_page();
        let mut face = AnnotationObject::new(
            "f0",
            AnnotationClass::Face,
            Polygon::from_corners(1.0, 1.0, 5.0, 5.0),
        );
        face.char_ref = Some(7);
        book.pages[0].annotations.push(face);
        let report = validate_book(&book);
        assert_eq!(report.errors.len(), 1);
        assert_eq!(report.errors[0].rule, RuleCode::DanglingCharRef);
        assert_eq!(report.errors[0].ann_id.as_deref(), Some("f0"));
    }

    #[test]
    fn out_of_page_tolerance_boundary() {
        // 800 * 0.005 = 4, so 804 is the last tolerated x.
        for (x, warn, err) in [(804.0, true, false), (805.0, false, true)] {
            let mut book = book_with_one_page();
            book.pages[0].annotations.push(AnnotationObject::new(
                "q0",
                AnnotationClass::Panel,
                Polygon::new(vec![(0.0, 0.0), (x, 0.0), (x, 50.0), (0.0, 50.0)]).unwrap(),
            ));
            let report = validate_book(&book);
            assert_eq!(
                report.warnings.iter().any(|i| i.rule == RuleCode::OutOfPage),
                warn,
                "x={x}"
            );
            assert_eq!(
                report.errors.iter().any(|i| i.rule == RuleCode::OutOfPage),
                err,
                "x={x}"
            );
        }
    }

    #[test]
    fn negative_coordinate_within_tolerance_warns() {
        let mut book = book_with_one_page();
        book.pages[0].annotations.push(AnnotationObject::new(
            "n0",
            AnnotationClass::Panel,
            Polygon::new(vec![(-3.0, 5.0), (10.0, 5.0), (10.0, 20.0), (-3.0, 20.0)]).unwrap(),
        ));
        let report = validate_book(&book);
        assert!(report.errors.is_empty());
        assert!(report.has_rule(RuleCode::OutOfPage));
    }

    #[test]
    fn page_index_gap_is_an_error() {
        let mut book = book_with_one_page();
        book.pages.push(UcaPage::new(2, 100, 100));
        let report = validate_book(&book);
        assert!(report.errors.iter().any(|i| i.rule == RuleCode::PageIndexOrder));
    }

    #[test]
    fn singleton_truncation_group_is_an_error() {
        let mut book = book_with_one_page();
        let mut ono = AnnotationObject::new(
            "o0",
            AnnotationClass::Onomatopoeia,
            Polygon::from_corners(1.0, 1.0, 4.0, 4.0),
        );
        ono.truncation_group = Some("g1".into());
        book.pages[0].annotations.push(ono);
        let report = validate_book(&book);
        assert!(report.errors.iter().any(|i| i.rule == RuleCode::TruncGroupSingleton));

        // A second member on the same page clears it.
        let mut ono2 = AnnotationObject::new(
            "o1",
            AnnotationClass::Onomatopoeia,
            Polygon::from_corners(5.0, 5.0, 8.0, 8.0),
        );
        ono2.truncation_group = Some("g1".into());
        book.pages[0].annotations.push(ono2);
        assert!(validate_book(&book).errors.is_empty());
    }

    #[test]
    fn speaker_links_must_resolve() {
        let mut book = book_with_one_page();
        book.pages[0].links.push(SpeakerLink {
            text_id: "nope".into(),
            speaker_char_ref: 9,
        });
        let report = validate_book(&book);
        assert!(report.errors.iter().any(|i| i.rule == RuleCode::LinkTextUnresolved));
        assert!(report.errors.iter().any(|i| i.rule == RuleCode::LinkSpeakerUnresolved));
    }

    #[test]
    fn issues_come_out_sorted() {
        let mut book = book_with_one_page();
        book.characters.push(CharacterEntry { id: 0, name: "dup".into() });
        let mut page2 = UcaPage::new(1, 100, 100);
        let mut face = AnnotationObject::new(
            "z9",
            AnnotationClass::Face,
            Polygon::from_corners(0.0, 0.0, 10.0, 10.0),
        );
        face.char_ref = Some(42);
        page2.annotations.push(face);
        book.pages.push(page2);
        let report = validate_book(&book);
        assert_eq!(report.errors[0].rule, RuleCode::DupCharId);
        assert_eq!(report.errors[1].rule, RuleCode::DanglingCharRef);
    }
}
