import { Card, Session } from "./session.js";
import { CandidateRow } from "./candidates.js";

/**
 * DOM rendering. The whole card list is re-rendered on every state
 * change; at workbench scale that is simpler and fast enough.
 */
export function mount(session: Session, root: HTMLElement): void {
  root.innerHTML = `
    <header>
      <h1>Translation workbench</h1>
      <p class="hint">Paste source text, review the engine's candidates, pick or edit one, accept.</p>
    </header>
    <form id="intake">
      <textarea id="source-text" rows="3" placeholder="Type or paste source sentences"></textarea>
      <button type="submit">Add sentences</button>
    </form>
    <section id="cards"></section>
  `;
  const form = root.querySelector<HTMLFormElement>("#intake")!;
  const textarea = root.querySelector<HTMLTextAreaElement>("#source-text")!;
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const added = session.addText(textarea.value);
    textarea.value = "";
    for (const card of added) void session.translateCard(card);
  });
  session.onChange = () => renderCards(session, root.querySelector("#cards")!);
  renderCards(session, root.querySelector("#cards")!);
}

function renderCards(session: Session, container: Element): void {
  container.innerHTML = "";
  for (const card of session.cards) {
    container.appendChild(renderCard(session, card));
  }
}

function renderCard(session: Session, card: Card): HTMLElement {
  const element = document.createElement("article");
  element.className = `card status-${card.status}`;
  element.dataset.cardId = String(card.id);

  const head = document.createElement("div");
  head.className = "card-head";
  head.innerHTML = `<span class="source"></span><span class="badge">${card.status}</span>`;
  head.querySelector(".source")!.textContent = card.source;
  element.appendChild(head);

  if (card.error) {
    const error = document.createElement("div");
    error.className = "error";
    error.textContent = `request failed: ${card.error}`;
    const retry = document.createElement("button");
    retry.textContent = "retry";
    retry.className = "retry";
    retry.addEventListener("click", () => {
      if (card.status === "new") void session.translateCard(card);
      else void session.accept(card);
    });
    error.appendChild(retry);
    element.appendChild(error);
  }

  const list = document.createElement("ul");
  list.className = "candidates";
  for (const row of card.candidates) {
    list.appendChild(renderRow(session, card, row));
  }
  element.appendChild(list);

  if (card.status === "ready") {
    element.appendChild(renderEditor(session, card));
  }
  if (card.status === "accepted") {
    const note = document.createElement("p");
    note.className = "accepted-note";
    note.textContent = `recorded as #${card.acceptedId}: ${session.chosenText(card) ?? ""}`;
    element.appendChild(note);
  }
  return element;
}

function renderRow(session: Session, card: Card, row: CandidateRow): HTMLElement {
  const item = document.createElement("li");
  item.className = row.manual ? "candidate manual" : "candidate";
  const label = document.createElement("label");
  const radio = document.createElement("input");
  radio.type = "radio";
  radio.name = `choice-${card.id}`;
  radio.disabled = card.status === "accepted" || row.manual;
  radio.checked = card.selected === row.index && !row.manual;
  radio.addEventListener("change", () => session.select(card, row.index));
  label.appendChild(radio);
  for (const segment of row.segments) {
    const span = document.createElement("span");
    span.className = `seg seg-${segment.kind}`;
    span.textContent = segment.text;
    label.appendChild(span);
    label.appendChild(document.createTextNode(" "));
  }
  item.appendChild(label);
  return item;
}

function renderEditor(session: Session, card: Card): HTMLElement {
  const wrap = document.createElement("div");
  wrap.className = "editor";
  const input = document.createElement("input");
  input.type = "text";
  input.placeholder = "or edit the translation by hand";
  input.value = card.editedText ?? "";
  input.addEventListener("input", () => {
    card.editedText = input.value;
    card.selected = null;
  });
  const accept = document.createElement("button");
  accept.textContent = "Accept";
  accept.addEventListener("click", () => void session.accept(card));
  wrap.appendChild(input);
  wrap.appendChild(accept);
  return wrap;
}
