#include "screenparse/caseframe.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "screenparse/error.hpp"

namespace screenparse {

std::set<std::pair<std::string, std::string>> SlotPolicy::load_compat_table(
    std::istream& in, const std::string& source) {
  std::set<std::pair<std::string, std::string>> table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos)
      throw ParseError(source, line_no, "expected `SYN_LABEL<TAB>SEM_LABEL`");
    std::string syn = line.substr(0, tab), sem = line.substr(tab + 1);
    if (syn.empty() || sem.empty()) throw ParseError(source, line_no, "empty label");
    if (!abstract_syntactic_inventory().contains(syn))
      throw ParseError(source, line_no, "unknown syntactic label '" + syn + "'");
    table.emplace(abstract_syntactic_inventory().canonical(syn), std::move(sem));
  }
  return table;
}

std::set<std::pair<std::string, std::string>> SlotPolicy::load_compat_table(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open compatibility table: " + path.string());
  return load_compat_table(in, path.string());
}

std::string find_slot(const Frame& frame, const PhraseGroup& group) {
  const std::string prefix = group.abstract_ + "#";
  std::size_t used = 0;
  for (const auto& slot : frame.slots)
    if (slot.key.starts_with(prefix)) ++used;
  return prefix + std::to_string(used + 1);
}

bool slot_error(const SlotPolicy& policy, const PhraseGroup& group, std::string_view /*key*/,
                std::optional<std::string_view> semantic_label) {
  if (policy.blocklist.contains(group.abstract_)) return true;
  if (semantic_label &&
      !policy.compatible.contains({group.abstract_, std::string(*semantic_label)}))
    return true;
  return false;
}

bool verb_error(const Frame& frame, const PhraseGroup& incoming) {
  return incoming.abstract_ == group::kVerb && frame.verb_group.has_value();
}

Placement FrameBuilder::add(const PhraseGroup& group,
                            std::optional<std::string_view> semantic_label) {
  const std::size_t group_index = next_group_++;
  if (frames_.empty()) frames_.push_back(Frame{0, std::nullopt, {}});
  if (verb_error(frames_.back(), group)) frames_.push_back(Frame{frames_.size(), std::nullopt, {}});

  Frame& frame = frames_.back();
  if (group.abstract_ == group::kVerb) {
    frame.verb_group = group_index;
    return Placement{frame.index, std::nullopt};
  }
  SlotFill fill{find_slot(frame, group), group_index, false};
  fill.incompatible = slot_error(policy_, group, fill.key, semantic_label);
  frame.slots.push_back(fill);
  return Placement{frame.index, fill};
}

std::vector<Frame> FrameBuilder::take_frames() {
  std::vector<Frame> out;
  out.swap(frames_);
  next_group_ = 0;
  return out;
}

std::vector<Frame> build_frames(std::span<const PhraseGroup> groups, const SlotPolicy& policy) {
  FrameBuilder builder(policy);
  for (const auto& g : groups) builder.add(g);
  return builder.take_frames();
}

UtteranceAnalysis interpret(AnalysisState state) {
  UtteranceAnalysis out;
  out.tokens = std::move(state.tokens);
  out.tagged = std::move(state.tagged);
  out.groups = std::move(state.groups);
  out.repairs = std::move(state.repairs);
  out.frames = std::move(state.frames);
  std::stable_sort(out.repairs.begin(), out.repairs.end(), event_order);
  out.surviving = surviving_positions(out.groups);
  return out;
}

namespace {

std::string group_text(const PhraseGroup& g) {
  std::string s;
  for (const auto& w : g.words) {
    if (!s.empty()) s += ' ';
    s += w.token.surface;
  }
  return s;
}

}  // namespace

void write_text(const UtteranceAnalysis& analysis, std::ostream& out) {
  std::size_t width = 10;
  for (const auto& t : analysis.tokens) width = std::max(width, t.surface.size() + 2);
  std::vector<bool> kept(analysis.tokens.size(), false);
  for (std::size_t p : analysis.surviving)
    if (p < kept.size()) kept[p] = true;

  for (const auto& w : analysis.tagged) {
    out << std::left << std::setw(static_cast<int>(width)) << w.token.surface << std::setw(3)
        << w.basic << std::setw(4) << w.abstract_ << (w.phrase_start ? '+' : '.') << "  "
        << (kept[w.position()] ? "kept" : "removed") << '\n';
  }
  for (const auto& e : analysis.repairs) {
    out << "repair " << to_string(e.kind) << " removed " << e.removed_span.first << '-'
        << e.removed_span.second;
    if (e.kept_span) out << " kept " << e.kept_span->first << '-' << e.kept_span->second;
    out << " (";
    for (std::size_t i = 0; i < e.evidence.size(); ++i) out << (i ? "," : "") << e.evidence[i];
    out << ")\n";
  }
  for (const auto& f : analysis.frames) {
    out << "frame " << f.index << ": verb=";
    if (f.verb_group) out << '[' << group_text(analysis.groups.at(*f.verb_group)) << ']';
    else out << "none";
    for (const auto& s : f.slots) {
      out << ' ' << s.key << "=[" << group_text(analysis.groups.at(s.group)) << ']';
      if (s.incompatible) out << "!";
    }
    out << '\n';
  }
}

}  // namespace screenparse
