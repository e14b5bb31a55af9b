// DOM wiring. All state transitions live in the view-model modules; this
// file only moves their output into elements and user events back in.

import { ApiClient, ApiError } from "./api";
import { segmentText, type AnnotationSpan } from "./annotations";
import { buildComparison } from "./comparison";
import { EditorBuffer } from "./editor";
import { chrome, toggleLocale, type Chrome, type Locale } from "./locale";
import { buildChart, type ChartModel } from "./progress";
import type { EssayRecord, Feedback, Prompt } from "./types";

const SVG_NS = "http://www.w3.org/2000/svg";

const TEMPLATE = `
<header class="chrome">
  <h1 data-msg="appTitle"></h1>
  <button id="locale-toggle" data-msg="switchLocale"></button>
</header>
<main>
  <aside id="prompt-pane">
    <h2 data-msg="prompts"></h2>
    <ul id="prompt-list"></ul>
  </aside>
  <section id="workspace">
    <div id="prompt-detail" dir="rtl"></div>
    <h2 data-msg="editorHeading"></h2>
    <div class="editor-stack">
      <textarea id="editor" dir="rtl" autocorrect="off" autocomplete="off"
                autocapitalize="off" spellcheck="false"></textarea>
      <div id="underlay" dir="rtl" aria-hidden="true"></div>
    </div>
    <div class="check-row">
      <button id="check-btn" data-msg="check" disabled></button>
      <span id="badge" class="badge" hidden></span>
      <span id="word-count" hidden></span>
    </div>
    <p id="notice" class="notice" hidden></p>
    <p id="banner" class="banner" hidden></p>
    <div id="popover" class="popover" hidden></div>
    <section id="progress-section">
      <h2 data-msg="progress"></h2>
      <div id="chart-host"></div>
    </section>
    <section id="comparison-section" hidden>
      <h2 data-msg="comparison"></h2>
      <div class="compare-controls">
        <select id="diff-from"></select>
        <select id="diff-to"></select>
      </div>
      <div class="panes">
        <div><h3 data-msg="comparisonBefore"></h3><div id="pane-before" class="pane" dir="rtl"></div></div>
        <div><h3 data-msg="comparisonAfter"></h3><div id="pane-after" class="pane" dir="rtl"></div></div>
      </div>
      <p id="compare-note" hidden></p>
    </section>
  </section>
</main>
`;

export interface AppHandle {
  root: HTMLElement;
  buffer: EditorBuffer;
  getLocale(): Locale;
  setLocale(locale: Locale): void;
  selectPrompt(promptId: string): Promise<void>;
  check(): Promise<void>;
  ready: Promise<void>;
}

export function mountApp(root: HTMLElement, api: ApiClient): AppHandle {
  const doc = root.ownerDocument;
  root.innerHTML = TEMPLATE;
  root.classList.add("app");

  const el = <T extends HTMLElement>(id: string): T => {
    const found = root.querySelector<T>(`#${id}`);
    if (!found) throw new Error(`missing element #${id}`);
    return found;
  };

  const editorEl = el<HTMLTextAreaElement>("editor");
  const underlayEl = el<HTMLDivElement>("underlay");
  const checkBtn = el<HTMLButtonElement>("check-btn");
  const badgeEl = el<HTMLSpanElement>("badge");
  const wordCountEl = el<HTMLSpanElement>("word-count");
  const noticeEl = el<HTMLParagraphElement>("notice");
  const bannerEl = el<HTMLParagraphElement>("banner");
  const popoverEl = el<HTMLDivElement>("popover");
  const promptListEl = el<HTMLUListElement>("prompt-list");
  const promptDetailEl = el<HTMLDivElement>("prompt-detail");
  const chartHost = el<HTMLDivElement>("chart-host");
  const comparisonSection = el<HTMLElement>("comparison-section");
  const fromSelect = el<HTMLSelectElement>("diff-from");
  const toSelect = el<HTMLSelectElement>("diff-to");
  const paneBefore = el<HTMLDivElement>("pane-before");
  const paneAfter = el<HTMLDivElement>("pane-after");
  const compareNote = el<HTMLParagraphElement>("compare-note");

  const buffer = new EditorBuffer();
  let ui: Chrome = chrome("ar");
  let essay: EssayRecord | null = null;
  let prompts: Prompt[] = [];
  let checking = false;
  let lastFeedback: Feedback | null = null;
  let revisionCount = 0;

  function applyChrome(): void {
    root.setAttribute("dir", ui.dir);
    root.setAttribute("lang", ui.locale);
    if (doc.documentElement) {
      doc.documentElement.setAttribute("dir", ui.dir);
      doc.documentElement.setAttribute("lang", ui.locale);
    }
    for (const node of Array.from(root.querySelectorAll<HTMLElement>("[data-msg]"))) {
      const key = node.getAttribute("data-msg") as keyof Chrome["strings"];
      node.textContent = ui.strings[key];
    }
    renderStatus();
    renderPromptList();
    renderPromptDetail();
  }

  function setNotice(text: string | null): void {
    noticeEl.hidden = text === null;
    noticeEl.textContent = text ?? "";
  }

  function setBanner(text: string | null): void {
    bannerEl.hidden = text === null;
    bannerEl.textContent = text ?? "";
  }

  function renderStatus(): void {
    if (lastFeedback === null) {
      badgeEl.hidden = true;
      wordCountEl.hidden = true;
      return;
    }
    badgeEl.hidden = false;
    badgeEl.textContent = `${ui.strings.levelBadge}: ${lastFeedback.cefr}`;
    wordCountEl.hidden = false;
    wordCountEl.textContent = `${ui.strings.wordCount}: ${lastFeedback.word_count}`;
  }

  // -- underlines ---------------------------------------------------------

  function renderUnderlay(): void {
    const result = buffer.renderFeedback();
    underlayEl.textContent = "";
    closePopover();
    if (result.kind === "stale") {
      setNotice(ui.strings.staleFeedback);
      return;
    }
    const advisories: string[] = [];
    if (lastFeedback?.below_minimum) advisories.push(ui.strings.belowMinimum);
    if (lastFeedback?.degraded) advisories.push(ui.strings.degraded);
    setNotice(advisories.length > 0 ? advisories.join(" ") : null);

    for (const segment of segmentText(buffer.text, result.spans)) {
      if (segment.span === null) {
        underlayEl.appendChild(doc.createTextNode(segment.text));
      } else {
        const mark = doc.createElement("mark");
        mark.className = "underline";
        mark.textContent = segment.text;
        mark.setAttribute("data-token-index", String(segment.span.tokenIndex));
        const span = segment.span;
        mark.addEventListener("click", (event) => {
          event.stopPropagation();
          openPopover(span);
        });
        underlayEl.appendChild(mark);
      }
    }
  }

  function openPopover(span: AnnotationSpan): void {
    popoverEl.hidden = false;
    popoverEl.textContent = "";
    const tagEl = doc.createElement("strong");
    tagEl.textContent = span.tag;
    const hintEl = doc.createElement("p");
    hintEl.textContent = span.hint;
    popoverEl.append(tagEl, hintEl);
    if (span.suggestion !== null) {
      const applyBtn = doc.createElement("button");
      applyBtn.className = "apply-btn";
      applyBtn.setAttribute("dir", "rtl");
      applyBtn.textContent = `${ui.strings.apply}: ${span.suggestion}`;
      applyBtn.addEventListener("click", () => {
        if (buffer.applySuggestion(span)) {
          editorEl.value = buffer.text;
          renderUnderlay();
        }
        closePopover();
      });
      popoverEl.appendChild(applyBtn);
    } else {
      const noneEl = doc.createElement("p");
      noneEl.textContent = ui.strings.noSuggestion;
      popoverEl.appendChild(noneEl);
    }
  }

  function closePopover(): void {
    popoverEl.hidden = true;
    popoverEl.textContent = "";
  }

  // -- prompts ------------------------------------------------------------

  function renderPromptList(): void {
    promptListEl.textContent = "";
    for (const prompt of prompts) {
      const item = doc.createElement("li");
      const button = doc.createElement("button");
      button.className = "prompt-item";
      button.setAttribute("data-prompt-id", prompt.id);
      button.textContent = `[${prompt.level}] ${prompt.topic}`;
      button.addEventListener("click", () => {
        void selectPrompt(prompt.id);
      });
      item.appendChild(button);
      promptListEl.appendChild(item);
    }
  }

  function renderPromptDetail(): void {
    if (essay === null) {
      promptDetailEl.textContent = ui.strings.startWriting;
      return;
    }
    const prompt = prompts.find((p) => p.id === essay?.prompt_id);
    if (!prompt) {
      promptDetailEl.textContent = "";
      return;
    }
    const min = `${ui.strings.minWords}: ${prompt.min_words}`;
    promptDetailEl.textContent = `${prompt.body_ar} (${min})`;
  }

  // -- progress and comparison ---------------------------------------------

  function renderChart(model: ChartModel): void {
    chartHost.textContent = "";
    if (model.kind === "empty") {
      const msg = doc.createElement("p");
      msg.id = "chart-empty";
      msg.textContent = ui.strings.progressEmpty;
      chartHost.appendChild(msg);
      return;
    }
    const svg = doc.createElementNS(SVG_NS, "svg");
    svg.setAttribute("id", "chart");
    svg.setAttribute("viewBox", `0 0 ${model.width} ${model.height}`);
    svg.setAttribute("width", String(model.width));
    svg.setAttribute("height", String(model.height));
    const addLine = (points: string, cls: string) => {
      if (!points) return;
      const line = doc.createElementNS(SVG_NS, "polyline");
      line.setAttribute("points", points);
      line.setAttribute("class", cls);
      line.setAttribute("fill", "none");
      svg.appendChild(line);
    };
    addLine(model.errorLine, "series-errors");
    addLine(model.levelLine, "series-level");
    for (const [cls, markers] of [
      ["marker-errors", model.errorMarkers],
      ["marker-level", model.levelMarkers],
    ] as const) {
      for (const marker of markers) {
        const dot = doc.createElementNS(SVG_NS, "circle");
        dot.setAttribute("cx", marker.x.toFixed(1));
        dot.setAttribute("cy", marker.y.toFixed(1));
        dot.setAttribute("r", "3.5");
        dot.setAttribute("class", cls);
        dot.setAttribute("data-value", String(marker.value));
        svg.appendChild(dot);
        const label = doc.createElementNS(SVG_NS, "text");
        label.setAttribute("x", marker.x.toFixed(1));
        label.setAttribute("y", (marker.y - 7).toFixed(1));
        label.setAttribute("class", `${cls}-label`);
        label.textContent = marker.label;
        svg.appendChild(label);
      }
    }
    for (const tick of model.xTicks) {
      const label = doc.createElementNS(SVG_NS, "text");
      label.setAttribute("x", tick.x.toFixed(1));
      label.setAttribute("y", String(model.height - 6));
      label.setAttribute("class", "x-tick");
      label.textContent = `${ui.strings.revision} ${tick.label}`;
      svg.appendChild(label);
    }
    const legend = doc.createElement("p");
    legend.className = "legend";
    legend.textContent = `● ${ui.strings.errorsSeries} ● ${ui.strings.levelSeries}`;
    chartHost.append(svg, legend);
  }

  async function refreshProgress(): Promise<void> {
    if (essay === null) {
      renderChart(buildChart([]));
      return;
    }
    const data = await api.progress(essay.essay_id);
    revisionCount = data.points.length;
    renderChart(buildChart(data.points));
    renderComparisonControls();
  }

  function renderComparisonControls(): void {
    comparisonSection.hidden = revisionCount < 2;
    if (revisionCount < 2) return;
    for (const select of [fromSelect, toSelect]) {
      select.textContent = "";
      for (let rev = 1; rev <= revisionCount; rev += 1) {
        const option = doc.createElement("option");
        option.value = String(rev);
        option.textContent = `${ui.strings.revision} ${rev}`;
        select.appendChild(option);
      }
    }
    fromSelect.value = String(revisionCount - 1);
    toSelect.value = String(revisionCount);
    void renderComparison();
  }

  async function renderComparison(): Promise<void> {
    if (essay === null) return;
    const fromRev = Number(fromSelect.value);
    const toRev = Number(toSelect.value);
    const data = await api.diff(essay.essay_id, fromRev, toRev);
    const model = buildComparison(data.ops);
    compareNote.hidden = model.changed;
    compareNote.textContent = model.changed ? "" : ui.strings.comparisonIdentical;
    for (const [pane, segments] of [
      [paneBefore, model.before],
      [paneAfter, model.after],
    ] as const) {
      pane.textContent = "";
      segments.forEach((segment, i) => {
        if (i > 0) pane.appendChild(doc.createTextNode(" "));
        if (segment.kind === "plain") {
          pane.appendChild(doc.createTextNode(segment.text));
        } else {
          const node = doc.createElement(segment.kind === "struck" ? "del" : "ins");
          node.textContent = segment.text;
          pane.appendChild(node);
        }
      });
    }
  }

  // -- actions --------------------------------------------------------------

  async function selectPrompt(promptId: string): Promise<void> {
    setBanner(null);
    let user = essay ? { user_id: essay.user_id } : null;
    if (user === null) {
      user = await api.createUser();
    }
    essay = await api.createEssay(user.user_id, promptId);
    lastFeedback = null;
    revisionCount = 0;
    checkBtn.disabled = false;
    comparisonSection.hidden = true;
    renderPromptDetail();
    renderStatus();
    await refreshProgress();
  }

  async function check(): Promise<void> {
    if (essay === null || checking || buffer.text.trim() === "") return;
    checking = true;
    checkBtn.disabled = true;
    checkBtn.textContent = ui.strings.checking;
    setBanner(null);
    try {
      const submission = await api.check(essay.essay_id, buffer.text);
      lastFeedback = submission.feedback;
      buffer.storeFeedback(submission.feedback);
      renderStatus();
      renderUnderlay();
      await refreshProgress();
    } catch (err) {
      // the buffer is not touched on any failure path
      const detail = err instanceof ApiError ? ` (${err.code})` : "";
      setBanner(`${ui.strings.checkFailed}${detail}`);
    } finally {
      checking = false;
      checkBtn.disabled = essay === null;
      checkBtn.textContent = ui.strings.check;
    }
  }

  editorEl.addEventListener("input", () => {
    buffer.setFromKeystroke(editorEl.value);
    renderUnderlay();
  });
  checkBtn.addEventListener("click", () => {
    void check();
  });
  el<HTMLButtonElement>("locale-toggle").addEventListener("click", () => {
    ui = chrome(toggleLocale(ui.locale));
    applyChrome();
  });
  fromSelect.addEventListener("change", () => {
    void renderComparison();
  });
  toSelect.addEventListener("change", () => {
    void renderComparison();
  });

  applyChrome();
  renderChart(buildChart([]));

  const ready = api
    .listPrompts()
    .then((list) => {
      prompts = list;
      renderPromptList();
      renderPromptDetail();
    })
    .catch((err) => {
      setBanner(`${ui.strings.checkFailed} (${err instanceof ApiError ? err.code : err})`);
    });

  return {
    root,
    buffer,
    getLocale: () => ui.locale,
    setLocale: (locale: Locale) => {
      ui = chrome(locale);
      applyChrome();
    },
    selectPrompt,
    check,
    ready,
  };
}
