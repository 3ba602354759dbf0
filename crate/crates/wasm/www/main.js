import init, { density, boundary, compare } from "./pkg/lnlaplace_wasm.js";

const $ = (id) => document.getElementById(id);
const num = (id) => parseFloat($(id).value);
const list = (id) => Float64Array.from($(id).value.split(",").map((s) => parseFloat(s)));

function plot(canvas, xs, series) {
  const ctx = canvas.getContext("2d");
  const { width: w, height: h } = canvas;
  ctx.clearRect(0, 0, w, h);
  const ys = series.flatMap((s) => s.ys);
  const [x0, x1] = [Math.min(...xs), Math.max(...xs)];
  let [y0, y1] = [Math.min(0, ...ys), Math.max(...ys)];
  if (y1 === y0) y1 = y0 + 1;
  const px = (x) => 40 + ((x - x0) / (x1 - x0)) * (w - 50);
  const py = (y) => h - 20 - ((y - y0) / (y1 - y0)) * (h - 30);
  ctx.strokeStyle = "#999";
  ctx.beginPath();
  ctx.moveTo(40, py(0));
  ctx.lineTo(w - 10, py(0));
  ctx.stroke();
  ctx.fillStyle = "#555";
  ctx.fillText(y1.toPrecision(3), 2, py(y1) + 4);
  ctx.fillText(y0.toPrecision(3), 2, py(y0));
  ctx.fillText(x0.toPrecision(3), 40, h - 5);
  ctx.fillText(x1.toPrecision(3), w - 40, h - 5);
  for (const s of series) {
    ctx.strokeStyle = s.color;
    ctx.beginPath();
    xs.forEach((x, i) => (i ? ctx.lineTo(px(x), py(s.ys[i])) : ctx.moveTo(px(x), py(s.ys[i]))));
    ctx.stroke();
  }
}

function guarded(msg, f) {
  return () => {
    $(msg).textContent = "";
    try {
      f();
    } catch (e) {
      $(msg).textContent = String(e);
    }
  };
}

function runDensity() {
  const v = density(list("d-mu"), list("d-sigma"), num("d-xmax"), 200);
  const xs = [], fs = [];
  for (let i = 0; i < v.length; i += 2) {
    xs.push(v[i]);
    fs.push(v[i + 1]);
  }
  plot($("d-plot"), xs, [{ ys: fs, color: "#1f77b4" }]);
}

function runBoundary() {
  const v = boundary(num("b-mu"), num("b-sigma"), num("b-tmax"), 300);
  const ts = [], re = [], im = [];
  for (let i = 0; i < v.length; i += 3) {
    ts.push(v[i]);
    re.push(v[i + 1]);
    im.push(v[i + 2]);
  }
  plot($("b-plot"), ts, [
    { ys: re, color: "#1f77b4" },
    { ys: im, color: "#ff7f0e" },
  ]);
}

const METHODS = ["Mellin-Barnes", "continuation", "direct quadrature", "small-z series", "sigma-asymptotic"];

function runCompare() {
  const v = compare(num("c-mu"), num("c-sigma"), num("c-re"), num("c-im"));
  const fmt = (x) => (Number.isNaN(x) ? "-" : x.toPrecision(12));
  const rows = METHODS.map(
    (name, m) =>
      `<tr><th>${name}</th><td>${fmt(v[3 * m])}</td><td>${fmt(v[3 * m + 1])}</td><td>${fmt(v[3 * m + 2])}</td></tr>`,
  );
  $("c-out").innerHTML = "<tr><th></th><th>re</th><th>im</th><th>error bound</th></tr>" + rows.join("");
}

await init();
$("d-run").onclick = guarded("d-msg", runDensity);
$("b-run").onclick = guarded("b-msg", runBoundary);
$("c-run").onclick = guarded("c-msg", runCompare);
guarded("d-msg", runDensity)();
guarded("b-msg", runBoundary)();
guarded("c-msg", runCompare)();
