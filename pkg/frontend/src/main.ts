/** Explorer wiring: domain picker on the left, 3D view / slice view /
 * diagnostics on the right; every displayed number comes verbatim from
 * the server payload.  In-flight requests are aborted when a new
 * selection arrives. */

import { ApiError, fetchDomain, fetchSlice, fetchTorus } from "./api.js";
import { drawDomain, drawMesh, drawSlice } from "./render.js";
import { chainSegments, cleanSegments, Segment } from "./slices.js";
import {
  applyError,
  applyReport,
  effectiveMode,
  ExplorerState,
  initialState,
  selectPoint,
  setMode,
  setT,
  sliderToT,
  SLIDER_STEPS,
  tToSlider,
} from "./state.js";
import { buildDiagnostics } from "./viewmodel.js";
import { fromCanvas, Viewport, zoomAt } from "./projection.js";
import type { DomainData, Mode, Plane } from "./types.js";

const BASE = "";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

class Explorer {
  state: ExplorerState = initialState();
  domain: DomainData | null = null;
  domainView: Viewport | null = null;
  sliceView: Viewport | null = null;
  yaw = 0.7;
  pitch = 0.5;
  controller: AbortController | null = null;

  domainCanvas = el<HTMLCanvasElement>("domain");
  meshCanvas = el<HTMLCanvasElement>("mesh");
  sliceCanvas = el<HTMLCanvasElement>("slice");
  banner = el<HTMLDivElement>("banner");
  panel = el<HTMLDivElement>("panel");
  tSlider = el<HTMLInputElement>("t-slider");
  tValue = el<HTMLSpanElement>("t-value");

  async start(): Promise<void> {
    const dom = await fetchDomain(BASE);
    this.domain = dom.value;
    this.tSlider.max = String(SLIDER_STEPS);
    this.tSlider.value = String(tToSlider(this.state.t));
    this.bindEvents();
    this.redrawDomain();
    await this.refresh();
  }

  bindEvents(): void {
    this.domainCanvas.addEventListener("click", (ev) => {
      if (!this.domain || !this.domainView) return;
      const rect = this.domainCanvas.getBoundingClientRect();
      const [x, y] = fromCanvas(
        this.domainView,
        ((ev.clientX - rect.left) * this.domainCanvas.width) / rect.width,
        ((ev.clientY - rect.top) * this.domainCanvas.height) / rect.height,
      );
      this.state = selectPoint(this.state, x, y, this.domain);
      this.redrawDomain();
      void this.refresh();
    });
    this.tSlider.addEventListener("input", () => {
      const t = sliderToT(Number(this.tSlider.value));
      this.state = setT(this.state, t);
      this.tValue.textContent = t === 0 ? "0" : t.toPrecision(4);
      void this.refresh();
    });
    for (const mode of ["golden", "deformed", "solved"] as Mode[]) {
      el<HTMLButtonElement>(`mode-${mode}`).addEventListener("click", () => {
        this.state = setMode(this.state, mode);
        this.tSlider.value = String(tToSlider(this.state.t));
        void this.refresh();
      });
    }
    for (const plane of ["XY", "XZ", "YZ"] as Plane[]) {
      el<HTMLButtonElement>(`plane-${plane}`).addEventListener("click", () => {
        this.state = { ...this.state, plane };
        this.sliceView = null;
        void this.refresh();
      });
    }
    this.meshCanvas.addEventListener("mousemove", (ev) => {
      if (ev.buttons !== 1) return;
      this.yaw += ev.movementX * 0.01;
      this.pitch += ev.movementY * 0.01;
      this.redrawMesh();
    });
    this.sliceCanvas.addEventListener("wheel", (ev) => {
      ev.preventDefault();
      if (!this.sliceView) return;
      const rect = this.sliceCanvas.getBoundingClientRect();
      const px = ((ev.clientX - rect.left) * this.sliceCanvas.width) / rect.width;
      const py = ((ev.clientY - rect.top) * this.sliceCanvas.height) / rect.height;
      this.sliceView = zoomAt(this.sliceView, px, py, ev.deltaY < 0 ? 1.25 : 0.8);
      this.redrawSlice(this.lastPolylines);
    });
  }

  lastPolylines: ReturnType<typeof chainSegments> = [];

  async refresh(): Promise<void> {
    if (this.controller) this.controller.abort();
    const controller = new AbortController();
    this.controller = controller;
    const { x, y, t, plane, offset } = this.state;
    const mode = effectiveMode(t, this.state.mode);
    try {
      const rep = await fetchTorus(BASE, x, y, t, mode, controller.signal);
      const slice = await fetchSlice(BASE, x, y, t, plane, offset, mode, controller.signal);
      if (controller.signal.aborted) return;
      this.state = applyReport(this.state, rep.value, rep.raw);
      this.lastPolylines = chainSegments(cleanSegments(slice.value.segments as Segment[]));
      this.sliceView = null;
      this.renderAll();
    } catch (err) {
      if (controller.signal.aborted) return;
      if (err instanceof ApiError) {
        this.state = applyError(this.state, err.message, err.region);
        this.renderBanner();
      } else {
        this.state = applyError(this.state, String(err), null);
        this.renderBanner();
      }
    }
  }

  renderAll(): void {
    this.renderBanner();
    this.redrawDomain();
    this.redrawMesh();
    this.redrawSlice(this.lastPolylines);
    this.renderPanel();
  }

  renderBanner(): void {
    this.banner.textContent = this.state.banner ?? "";
    this.banner.style.display = this.state.banner ? "block" : "none";
  }

  redrawDomain(): void {
    if (!this.domain) return;
    const ctx = this.domainCanvas.getContext("2d")!;
    this.domainView = drawDomain(ctx, this.domain, [this.state.x, this.state.y]);
  }

  redrawMesh(): void {
    if (!this.state.report) return;
    drawMesh(this.meshCanvas.getContext("2d")!, this.state.report, this.yaw, this.pitch);
  }

  redrawSlice(polylines: ReturnType<typeof chainSegments>): void {
    const ctx = this.sliceCanvas.getContext("2d")!;
    this.sliceView = drawSlice(ctx, polylines, this.state.plane, this.sliceView);
  }

  renderPanel(): void {
    const { report, rawReport } = this.state;
    if (!report || !rawReport) return;
    const d = buildDiagnostics(report, rawReport);
    const rows: [string, string][] = [
      ["region", d.region],
      ["mode", d.mode],
      ["embedding", d.verdict],
      ["sign list = reference", d.signsMatch],
      ["flatness defect", d.thetaDefect],
      ["hull triangles", d.hullTriangles],
    ];
    if (d.modulus) rows.push(["modulus", d.modulus]);
    if (d.modulusDistance) rows.push(["modulus drift", d.modulusDistance]);
    if (d.solverIterations) rows.push(["solver iterations", d.solverIterations]);
    for (let i = 0; i < Math.min(4, d.coneAngles.length); i++) {
      rows.push([`cone angle ${i}`, d.coneAngles[i]]);
    }
    this.panel.innerHTML = "";
    for (const [k, v] of rows) {
      const dt = document.createElement("dt");
      dt.textContent = k;
      const dd = document.createElement("dd");
      dd.textContent = v;
      dd.dataset.key = k;
      this.panel.append(dt, dd);
    }
    const badge = el<HTMLSpanElement>("verdict-badge");
    badge.textContent = d.verdict;
    badge.className = `badge badge-${d.verdict}`;
  }
}

new Explorer().start().catch((err) => {
  const banner = document.getElementById("banner");
  if (banner) {
    banner.textContent = String(err);
    (banner as HTMLElement).style.display = "block";
  }
});
