/** Dependency-free SVG plots: a multi-series line plot and a bar chart. */

export interface Point {
    x: number;
    y: number;
}

export interface Series {
    label: string;
    points: Point[];
}

export interface PlotLabels {
    title: string;
    xLabel?: string;
    yLabel?: string;
}

const WIDTH = 640;
const HEIGHT = 400;
const MARGIN = { top: 40, right: 140, bottom: 50, left: 70 };
const COLORS = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                "#8c564b", "#e377c2"];

function esc(text: string): string {
    return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

function open(labels: PlotLabels): string {
    return `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" ` +
        `height="${HEIGHT}" viewBox="0 0 ${WIDTH} ${HEIGHT}" ` +
        `font-family="sans-serif" font-size="12">\n` +
        `<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>\n` +
        `<text x="${WIDTH / 2}" y="20" text-anchor="middle" font-size="14">` +
        `${esc(labels.title)}</text>\n`;
}

export function linePlot(series: readonly Series[], labels: PlotLabels): string {
    const xs = series.flatMap(s => s.points.map(p => p.x));
    const ys = series.flatMap(s => s.points.map(p => p.y));
    const xMin = Math.min(...xs, 0);
    const xMax = Math.max(...xs, 1);
    const yMax = Math.max(...ys, 1e-9);
    const plotW = WIDTH - MARGIN.left - MARGIN.right;
    const plotH = HEIGHT - MARGIN.top - MARGIN.bottom;
    const px = (x: number) => MARGIN.left + (x - xMin) / (xMax - xMin || 1) * plotW;
    const py = (y: number) => MARGIN.top + plotH - y / yMax * plotH;

    let svg = open(labels);
    svg += `<line x1="${MARGIN.left}" y1="${MARGIN.top + plotH}" ` +
        `x2="${MARGIN.left + plotW}" y2="${MARGIN.top + plotH}" stroke="black"/>\n`;
    svg += `<line x1="${MARGIN.left}" y1="${MARGIN.top}" ` +
        `x2="${MARGIN.left}" y2="${MARGIN.top + plotH}" stroke="black"/>\n`;
    series.forEach((s, i) => {
        const color = COLORS[i % COLORS.length];
        const path = s.points.map(p => `${px(p.x)},${py(p.y)}`).join(" ");
        svg += `<polyline points="${path}" fill="none" stroke="${color}" ` +
            `stroke-width="2"/>\n`;
        for (const p of s.points) {
            svg += `<circle cx="${px(p.x)}" cy="${py(p.y)}" r="3" fill="${color}"/>\n`;
        }
        const ly = MARGIN.top + 16 * i;
        svg += `<rect x="${WIDTH - MARGIN.right + 10}" y="${ly - 9}" width="10" ` +
            `height="10" fill="${color}"/>\n`;
        svg += `<text x="${WIDTH - MARGIN.right + 25}" y="${ly}">` +
            `${esc(s.label)}</text>\n`;
    });
    for (const x of [...new Set(xs)].sort((a, b) => a - b)) {
        svg += `<text x="${px(x)}" y="${MARGIN.top + plotH + 18}" ` +
            `text-anchor="middle">${x}</text>\n`;
    }
    svg += `<text x="${MARGIN.left - 8}" y="${py(yMax)}" text-anchor="end">` +
        `${yMax.toPrecision(3)}</text>\n`;
    svg += `<text x="${MARGIN.left - 8}" y="${py(0)}" text-anchor="end">0</text>\n`;
    if (labels.xLabel) {
        svg += `<text x="${MARGIN.left + plotW / 2}" y="${HEIGHT - 10}" ` +
            `text-anchor="middle">${esc(labels.xLabel)}</text>\n`;
    }
    if (labels.yLabel) {
        svg += `<text x="16" y="${MARGIN.top + plotH / 2}" text-anchor="middle" ` +
            `transform="rotate(-90 16 ${MARGIN.top + plotH / 2})">` +
            `${esc(labels.yLabel)}</text>\n`;
    }
    return svg + "</svg>\n";
}

export interface Bar {
    label: string;
    value: number;
}

export function barChart(bars: readonly Bar[], labels: PlotLabels): string {
    const plotW = WIDTH - MARGIN.left - MARGIN.right;
    const plotH = HEIGHT - MARGIN.top - MARGIN.bottom;
    const yMax = Math.max(...bars.map(b => b.value), 1e-9);
    const step = plotW / Math.max(bars.length, 1);
    const barWidth = step * 0.6;

    let svg = open(labels);
    svg += `<line x1="${MARGIN.left}" y1="${MARGIN.top + plotH}" ` +
        `x2="${MARGIN.left + plotW}" y2="${MARGIN.top + plotH}" stroke="black"/>\n`;
    bars.forEach((bar, i) => {
        const h = bar.value / yMax * plotH;
        const x = MARGIN.left + step * i + (step - barWidth) / 2;
        const y = MARGIN.top + plotH - h;
        svg += `<rect x="${x}" y="${y}" width="${barWidth}" height="${h}" ` +
            `fill="${COLORS[i % COLORS.length]}"/>\n`;
        svg += `<text x="${x + barWidth / 2}" y="${MARGIN.top + plotH + 16}" ` +
            `text-anchor="middle">${esc(bar.label)}</text>\n`;
    });
    svg += `<text x="${MARGIN.left - 8}" y="${MARGIN.top}" text-anchor="end">` +
        `${yMax.toPrecision(3)}</text>\n`;
    if (labels.yLabel) {
        svg += `<text x="16" y="${MARGIN.top + plotH / 2}" text-anchor="middle" ` +
            `transform="rotate(-90 16 ${MARGIN.top + plotH / 2})">` +
            `${esc(labels.yLabel)}</text>\n`;
    }
    return svg + "</svg>\n";
}
