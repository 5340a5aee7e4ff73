import init, { homotopyTable, inducedMap, certify } from "./pkg/orthocert_web.js";

const $ = (id) => document.getElementById(id);
const num = (id) => Number.parseInt($(id).value, 10);

function showError(el, err) {
  el.className = "error";
  el.textContent = String(err);
}

function renderTable() {
  const out = $("table-out");
  try {
    const table = JSON.parse(homotopyTable($("family").value, num("max-n")));
    const maxN = table.rows.length;
    let html = "<table><tr><th>n \\ i</th>";
    for (let i = 0; i < maxN; i++) html += `<th>${i}</th>`;
    html += "</tr>";
    for (const row of table.rows) {
      html += `<tr><th>${row.n}</th>`;
      row.cells.forEach((cell, i) => {
        const cls = i === row.n - 1 && row.n >= 2 ? ' class="unstable"' : "";
        html += `<td${cls}>${cell}</td>`;
      });
      html += "</tr>";
    }
    out.className = "";
    out.innerHTML = html + "</table>";
  } catch (err) {
    showError(out, err);
  }
}

function renderMap() {
  const out = $("map-out");
  try {
    const h = JSON.parse(inducedMap($("kind").value, num("map-m"), num("map-n"), num("map-i")));
    const rows = h.matrix.map((r) => "  [" + r.join(", ") + "]").join("\n");
    out.className = "";
    out.textContent = `${h.source}  ->  ${h.target}\nmatrix:\n${rows || "  (empty)"}\nepi: ${h.epi}, iso: ${h.iso}`;
  } catch (err) {
    showError(out, err);
  }
}

function renderCertificate() {
  const out = $("cert-out");
  const narrative = $("cert-narrative");
  try {
    const res = JSON.parse(certify(num("cert-m"), num("cert-n"), num("cert-dim")));
    narrative.className = "";
    narrative.textContent = res.narrative;
    out.className = "";
    out.textContent = JSON.stringify(res.certificate, null, 2);
  } catch (err) {
    narrative.textContent = "";
    showError(out, err);
  }
}

await init();
$("table-go").addEventListener("click", renderTable);
$("map-go").addEventListener("click", renderMap);
$("cert-go").addEventListener("click", renderCertificate);
renderTable();
renderMap();
renderCertificate();
