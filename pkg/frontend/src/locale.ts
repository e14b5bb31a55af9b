// Bilingual chrome. The interface language flips between Arabic and
// English; essay content itself is always Arabic and keeps its own
// direction regardless of the chrome.

export type Locale = "ar" | "en";

export type Direction = "rtl" | "ltr";

const MESSAGES = {
  appTitle: { ar: "كاتب", en: "Kateb" },
  prompts: { ar: "الموضوعات", en: "Prompts" },
  editorHeading: { ar: "مسودتك", en: "Your draft" },
  check: { ar: "تحقق", en: "Check" },
  checking: { ar: "جارٍ التحقق...", en: "Checking..." },
  levelBadge: { ar: "المستوى التقديري", en: "Estimated level" },
  wordCount: { ar: "عدد الكلمات", en: "Word count" },
  belowMinimum: {
    ar: "النص أقصر من الحد الأدنى لهذا المستوى؛ المستوى المقدر محدود بطول النص.",
    en: "The text is below this level's word minimum; the estimate is capped by length.",
  },
  degraded: {
    ar: "تعذر الوصول إلى المدقق البعيد؛ استخدمت القواعد المحلية.",
    en: "The remote checker was unreachable; local rules answered instead.",
  },
  staleFeedback: {
    ar: "تغير النص منذ آخر تحقق؛ اضغط \"تحقق\" لتحديث الملاحظات.",
    en: "The text changed since the last check; press Check to refresh feedback.",
  },
  checkFailed: {
    ar: "فشل التحقق؛ نصك كما هو ولم يُرسل أي تعديل.",
    en: "The check failed; your text is untouched.",
  },
  progress: { ar: "التقدم", en: "Progress" },
  progressEmpty: { ar: "لا مراجعات بعد.", en: "No revisions yet." },
  errorsSeries: { ar: "عدد الأخطاء", en: "Errors" },
  levelSeries: { ar: "المستوى", en: "Level" },
  comparison: { ar: "قبل وبعد", en: "Before and after" },
  comparisonBefore: { ar: "قبل", en: "Before" },
  comparisonAfter: { ar: "بعد", en: "After" },
  comparisonIdentical: { ar: "لا فرق بين المراجعتين.", en: "The revisions are identical." },
  apply: { ar: "طبق الاقتراح", en: "Apply suggestion" },
  noSuggestion: { ar: "لا اقتراح وحيد لهذا الخطأ.", en: "No single suggestion for this error." },
  minWords: { ar: "الحد الأدنى للكلمات", en: "Minimum words" },
  switchLocale: { ar: "English", en: "العربية" },
  revision: { ar: "مراجعة", en: "Revision" },
  startWriting: { ar: "اختر موضوعا لبدء الكتابة.", en: "Pick a prompt to start writing." },
} as const;

export type MessageKey = keyof typeof MESSAGES;

export interface Chrome {
  locale: Locale;
  dir: Direction;
  strings: Record<MessageKey, string>;
}

export function chrome(locale: Locale): Chrome {
  const strings = {} as Record<MessageKey, string>;
  for (const key of Object.keys(MESSAGES) as MessageKey[]) {
    strings[key] = MESSAGES[key][locale];
  }
  return { locale, dir: locale === "ar" ? "rtl" : "ltr", strings };
}

export function toggleLocale(locale: Locale): Locale {
  return locale === "ar" ? "en" : "ar";
}
