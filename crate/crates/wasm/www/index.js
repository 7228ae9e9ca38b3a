import init, { check_formula, circuit_svg, circuit_dot, contraction_schedule } from "./pkg/pathcheck_wasm.js";

const $ = (id) => document.getElementById(id);

function fail(target, e) {
  target.innerHTML = "";
  const p = document.createElement("p");
  p.className = "error";
  p.textContent = e instanceof Error ? e.message : String(e);
  target.appendChild(p);
}

function runCheck() {
  const out = $("check-out");
  try {
    const r = check_formula($("formula").value, $("trace").value, $("format").value);
    const agree = r.sequence === r.naive_sequence ? "agrees" : "DISAGREES";
    out.innerHTML = `
      <p><strong>${r.satisfied ? "SATISFIED" : "VIOLATED"}</strong></p>
      <p>positive normal form: <code></code></p>
      <p>circuit engine <span class="seq">${r.sequence}</span><br>
         naive engine &nbsp;<span class="seq">${r.naive_sequence}</span> (${agree})</p>
      <p>${r.leaves} leaves, ${r.stages} stages, ${r.gates_built} gates built</p>`;
    out.querySelector("code").textContent = r.pnf;
  } catch (e) {
    fail(out, e);
  }
}

let frames = [];
let frame = 0;

function showFrame() {
  const f = frames[frame];
  $("schedule-out").innerHTML = f.svg;
  $("frame-info").textContent = f.half === "done"
    ? `contracted after ${f.stage} stage(s)`
    : `stage ${f.stage}, ${f.half} half: ${f.contracted} leaf/leaves contracted, ${f.leaves_after} left`;
  $("prev").disabled = frame === 0;
  $("next").disabled = frame === frames.length - 1;
}

function runSchedule() {
  try {
    const s = JSON.parse(contraction_schedule($("formula").value, $("trace").value, $("format").value));
    frames = s.frames;
    frame = 0;
    showFrame();
    $("frame-info").textContent += ` (${s.leaves} leaves, ${s.stages} stages, bound ${s.bound})`;
  } catch (e) {
    frames = [];
    $("prev").disabled = $("next").disabled = true;
    $("frame-info").textContent = "";
    fail($("schedule-out"), e);
  }
}

function runCircuit() {
  const args = [$("op").value, $("side").value, $("seq").value, $("evaluated").checked];
  try {
    $("circuit-out").innerHTML = circuit_svg(...args);
    $("circuit-dot").textContent = circuit_dot(...args);
  } catch (e) {
    $("circuit-dot").textContent = "";
    fail($("circuit-out"), e);
  }
}

await init();
$("run-check").onclick = runCheck;
$("run-schedule").onclick = runSchedule;
$("run-circuit").onclick = runCircuit;
$("prev").onclick = () => { frame -= 1; showFrame(); };
$("next").onclick = () => { frame += 1; showFrame(); };
runCheck();
runCircuit();
