import init, { realize, exploreWord, analyzeGraph } from "./pkg/cliquevec_wasm.js";

const SVG = "http://www.w3.org/2000/svg";

function el(name, attrs = {}, parent) {
  const node = document.createElementNS(SVG, name);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  if (parent) parent.appendChild(node);
  return node;
}

function layout(n, size) {
  const r = size / 2 - 30;
  return Array.from({ length: n }, (_, i) => {
    const a = -Math.PI / 2 + (2 * Math.PI * i) / n;
    return [size / 2 + r * Math.cos(a), size / 2 + r * Math.sin(a)];
  });
}

// classes[v] styles vertex v; onPair(u, v) makes every vertex pair clickable.
function draw(svg, graph, { classes = [], onPair = null } = {}) {
  svg.replaceChildren();
  const size = +svg.getAttribute("width");
  const pos = layout(graph.n, size);
  const has = new Set(graph.edges.map(([u, v]) => `${u},${v}`));
  if (onPair) {
    for (let v = 1; v < graph.n; v++) {
      for (let u = 0; u < v; u++) {
        if (has.has(`${u},${v}`)) continue;
        const line = el("line", { class: "ghost", x1: pos[u][0], y1: pos[u][1], x2: pos[v][0], y2: pos[v][1] }, svg);
        line.addEventListener("click", () => onPair(u, v));
      }
    }
  }
  for (const [u, v] of graph.edges) {
    const line = el("line", { x1: pos[u][0], y1: pos[u][1], x2: pos[v][0], y2: pos[v][1] }, svg);
    if (onPair) {
      line.style.cursor = "pointer";
      line.style.strokeWidth = 4;
      line.addEventListener("click", () => onPair(u, v));
    }
  }
  pos.forEach(([x, y], v) => {
    el("circle", { cx: x, cy: y, r: 13, class: classes[v] || "" }, svg);
    el("text", { x, y }, svg).textContent = v;
  });
}

function facts(dl, items) {
  dl.replaceChildren();
  for (const [term, value, cls] of items) {
    const dt = document.createElement("dt");
    dt.textContent = term;
    const dd = document.createElement("dd");
    if (value instanceof Node) dd.appendChild(value);
    else dd.textContent = value;
    if (cls) dd.className = cls;
    dl.append(dt, dd);
  }
}

function wordNode(word) {
  const span = document.createElement("span");
  span.className = "word";
  for (const letter of word) {
    const s = document.createElement("span");
    s.className = letter;
    s.textContent = letter;
    span.appendChild(s);
  }
  return span;
}

// Vertex i is added by the i-th letter from the right.
function letterClasses(word) {
  return [...word].reverse();
}

function bettiNode(table) {
  const t = document.createElement("table");
  t.className = "betti";
  const pd = table.projective_dimension;
  const rows = Math.max(0, ...table.entries.map(([i, j]) => j - i));
  const get = (i, j) => (table.entries.find(([a, b]) => a === i && b === j) || [0, 0, 0])[2];
  const header = t.insertRow();
  header.appendChild(document.createElement("th"));
  for (let i = 0; i <= pd; i++) {
    const th = document.createElement("th");
    th.textContent = i;
    header.appendChild(th);
  }
  for (let r = 0; r <= rows; r++) {
    const row = t.insertRow();
    const th = document.createElement("th");
    th.textContent = `${r}:`;
    row.appendChild(th);
    for (let i = 0; i <= pd; i++) row.insertCell().textContent = get(i, i + r) || ".";
  }
  return t;
}

function showRealize() {
  const svg = document.getElementById("realize-svg");
  const dl = document.getElementById("realize-facts");
  const c = document.getElementById("realize-c").value;
  const k = Math.max(0, +document.getElementById("realize-k").value || 0);
  try {
    const r = JSON.parse(realize(c, k));
    if (!r.valid) {
      svg.replaceChildren();
      facts(dl, [["b", r.b.join(",")], ["verdict", `no ${k}-connected chordal graph: ${r.reason}`, "error"]]);
      return;
    }
    draw(svg, r.graph, { classes: letterClasses(r.word) });
    facts(dl, [
      ["b", r.b.join(",")],
      ["word", wordNode(r.word)],
      ["connectivity", r.connectivity],
      ["graph6", r.graph.graph6],
      ["verdict", `realized by a ${r.connectivity}-connected threshold graph`, "ok"],
    ]);
  } catch (e) {
    svg.replaceChildren();
    facts(dl, [["error", String(e), "error"]]);
  }
}

function showWord() {
  const svg = document.getElementById("word-svg");
  const dl = document.getElementById("word-facts");
  try {
    const w = JSON.parse(exploreWord(document.getElementById("word-input").value));
    draw(svg, w.graph, { classes: letterClasses(w.word) });
    facts(dl, [
      ["word", wordNode(w.word)],
      ["b (run lengths up to each S)", w.b.join(",")],
      ["clique vector", w.c.join(",")],
      ["connectivity (leading S count)", w.connectivity],
      ["graph6", w.graph.graph6],
    ]);
  } catch (e) {
    svg.replaceChildren();
    facts(dl, [["error", String(e), "error"]]);
  }
}

const editor = { n: 5, edges: new Set(["0,1", "1,2", "2,3", "3,4", "0,4"]) };

function editorText() {
  return `${editor.n}\n${[...editor.edges].map((e) => e.replace(",", " ")).join("\n")}\n`;
}

function showAnalysis() {
  const svg = document.getElementById("analyze-svg");
  const dl = document.getElementById("analyze-facts");
  try {
    const a = JSON.parse(analyzeGraph(editorText()));
    draw(svg, a.graph, {
      onPair: (u, v) => {
        const key = `${u},${v}`;
        if (!editor.edges.delete(key)) editor.edges.add(key);
        showAnalysis();
      },
    });
    const items = [
      ["chordal", a.chordal ? `yes, elimination order ${a.elimination_order.join(" ")}` : "no", a.chordal ? "ok" : "error"],
      ["clique vector c", a.c.join(",")],
      ["b", a.b.join(",")],
      ["c is valid for k up to", a.valid_up_to === null ? "none (not a chordal clique vector)" : a.valid_up_to],
      ["connectivity", `${a.connectivity} (classical ${a.classical_connectivity})`],
      ["from the linear strand", a.betti_connectivity],
    ];
    if (a.betti_table) {
      items.push(["Betti table", bettiNode(a.betti_table)]);
      items.push(["depth", a.betti_table.depth]);
      items.push(["2-linear resolution", a.betti_table.two_linear ? "yes" : "no"]);
    }
    facts(dl, items);
  } catch (e) {
    svg.replaceChildren();
    facts(dl, [["error", String(e), "error"]]);
  }
}

function resize(n, edges) {
  editor.n = Math.min(10, Math.max(1, n));
  editor.edges = new Set(edges.filter(([u, v]) => v < editor.n).map(([u, v]) => `${u},${v}`));
  document.getElementById("analyze-n").value = editor.n;
  showAnalysis();
}

function pairs(n) {
  const out = [];
  for (let v = 1; v < n; v++) for (let u = 0; u < v; u++) out.push([u, v]);
  return out;
}

await init();

document.getElementById("realize-go").addEventListener("click", showRealize);
document.getElementById("realize-c").addEventListener("keydown", (e) => e.key === "Enter" && showRealize());
document.getElementById("word-input").addEventListener("input", showWord);
document.getElementById("analyze-n").addEventListener("change", (e) =>
  resize(+e.target.value, [...editor.edges].map((s) => s.split(",").map(Number))),
);
document.getElementById("analyze-clear").addEventListener("click", () => resize(editor.n, []));
document.getElementById("analyze-complete").addEventListener("click", () => resize(editor.n, pairs(editor.n)));
document.getElementById("analyze-cycle").addEventListener("click", () =>
  resize(editor.n, Array.from({ length: editor.n }, (_, i) => [Math.min(i, (i + 1) % editor.n), Math.max(i, (i + 1) % editor.n)]).filter(([u, v]) => u !== v)),
);

showRealize();
showWord();
showAnalysis();
