//! The unified comic-annotation domain model.
//!
//! One [`UcaBook`] holds a character roster, ordered pages, and every
//! annotation of a single comic book. Values are immutable after
//! construction as far as the library is concerned; all operations take
//! them by reference and return new values.

use std::collections::BTreeMap;
use std::fmt;

use crate::Polygon;

/// Which corpus a book came from.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum SourceDataset {
    Dcm,
    C100,
    Ebd,
    M109,
    Pop,
    Other(String),
}

impl SourceDataset {
    pub fn tag(&self) -> &str {
        match self {
            SourceDataset::Dcm => "dcm",
            SourceDataset::C100 => "c100",
            SourceDataset::Ebd => "ebd",
            SourceDataset::M109 => "m109",
            SourceDataset::Pop => "pop",
            SourceDataset::Other(s) => s,
        }
    }

    pub fn from_tag(tag: &str) -> Self {
        match tag {
            "dcm" => SourceDataset::Dcm,
            "c100" => SourceDataset::C100,
            "ebd" => SourceDataset::Ebd,
            "m109" => SourceDataset::M109,
            "pop" => SourceDataset::Pop,
            other => SourceDataset::Other(other.to_string()),
        }
    }
}

impl fmt::Display for SourceDataset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Annotation classes. The first four are the detection classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AnnotationClass {
    Panel,
    Character,
    Text,
    Face,
    Balloon,
    Onomatopoeia,
}

impl AnnotationClass {
    pub const ALL: [AnnotationClass; 6] = [
        AnnotationClass::Panel,
        AnnotationClass::Character,
        AnnotationClass::Text,
        AnnotationClass::Face,
        AnnotationClass::Balloon,
        AnnotationClass::Onomatopoeia,
    ];

    /// The four classes models are benchmarked on.
    pub const DETECTION: [AnnotationClass; 4] = [
        AnnotationClass::Panel,
        AnnotationClass::Character,
        AnnotationClass::Text,
        AnnotationClass::Face,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AnnotationClass::Panel => "panel",
            AnnotationClass::Character => "character",
            AnnotationClass::Text => "text",
            AnnotationClass::Face => "face",
            AnnotationClass::Balloon => "balloon",
            AnnotationClass::Onomatopoeia => "onomatopoeia",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == name)
    }

    pub fn is_detection(self) -> bool {
        Self::DETECTION.contains(&self)
    }
}

impl fmt::Display for AnnotationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Roster entry: links page annotations to a named character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterEntry {
    pub id: u32,
    pub name: String,
}

/// Opaque story span (title plus inclusive page-index range); never interpreted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StoryEntry {
    pub title: String,
    pub first_page: u32,
    pub last_page: u32,
}

/// One labeled region on a page.
#[derive(Debug, Clone, PartialEq)]
pub struct AnnotationObject {
    /// Unique within the owning page.
    pub id: String,
    pub class: AnnotationClass,
    pub polygon: Polygon,
    /// Roster reference; meaningful for character and face annotations.
    pub char_ref: Option<u32>,
    /// Spoken/written content; meaningful for text annotations.
    pub transcription: Option<String>,
    /// Ties together the parts of an onomatopoeia split across drawings.
    pub truncation_group: Option<String>,
    /// Unknown source attributes carried through for forward compatibility.
    pub extensions: BTreeMap<String, String>,
}

impl AnnotationObject {
    pub fn new(id: impl Into<String>, class: AnnotationClass, polygon: Polygon) -> Self {
        Self {
            id: id.into(),
            class,
            polygon,
            char_ref: None,
            transcription: None,
            truncation_group: None,
            extensions: BTreeMap::new(),
        }
    }
}

/// Speaker link: which roster character utters a given text annotation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpeakerLink {
    pub text_id: String,
    pub speaker_char_ref: u32,
}

/// One page image with its annotations.
#[derive(Debug, Clone, PartialEq)]
pub struct UcaPage {
    pub index: u32,
    pub width: u32,
    pub height: u32,
    pub annotations: Vec<AnnotationObject>,
    pub links: Vec<SpeakerLink>,
    /// Unknown attributes / elements preserved opaquely.
    /// Attribute-style entries use the attribute name as key; raw unknown
    /// child elements use reserved `#0`, `#1`, ... keys.
    pub extensions: BTreeMap<String, String>,
}

impl UcaPage {
    pub fn new(index: u32, width: u32, height: u32) -> Self {
        Self {
            index,
            width,
            height,
            annotations: Vec::new(),
            links: Vec::new(),
            extensions: BTreeMap::new(),
        }
    }

    pub fn annotation(&self, id: &str) -> Option<&AnnotationObject> {
        self.annotations.iter().find(|a| a.id == id)
    }
}

/// A whole comic book: metadata, roster, stories, and ordered pages.
#[derive(Debug, Clone, PartialEq)]
pub struct UcaBook {
    pub title: String,
    pub dataset: SourceDataset,
    pub characters: Vec<CharacterEntry>,
    pub stories: Vec<StoryEntry>,
    pub pages: Vec<UcaPage>,
    /// Same conventions as [`UcaPage::extensions`].
    pub extensions: BTreeMap<String, String>,
}

impl UcaBook {
    pub fn new(title: impl Into<String>, dataset: SourceDataset) -> Self {
        Self {
            title: title.into(),
            dataset,
            characters: Vec::new(),
            stories: Vec::new(),
            pages: Vec::new(),
            extensions: BTreeMap::new(),
        }
    }

    pub fn character(&self, id: u32) -> Option<&CharacterEntry> {
        self.characters.iter().find(|c| c.id == id)
    }

    pub fn annotation_count(&self) -> usize {
        self.pages.iter().map(|p| p.annotations.len()).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dataset_tag_round_trip() {
        for tag in ["dcm", "c100", "ebd", "m109", "pop", "weird"] {
            assert_eq!(SourceDataset::from_tag(tag).tag(), tag);
        }
    }

    #[test]
    fn detection_classes_are_the_first_four() {
        let names: Vec<_> = AnnotationClass::DETECTION.iter().map(|c| c.name()).collect();
        assert_eq!(names, ["panel", "character", "text", "face"]);
        assert!(AnnotationClass::Panel.is_detection());
        assert!(!AnnotationClass::Balloon.is_detection());
    }

    #[test]
    fn class_name_round_trip() {
        for c in AnnotationClass::ALL {
            assert_eq!(AnnotationClass::from_name(c.name()), Some(c));
        }
        assert_eq!(AnnotationClass::from_name("frame"), None);
    }
}
