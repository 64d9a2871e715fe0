#include "symbrank/io.hpp"

#include <json.hpp>

#include <stdexcept>

namespace symbrank {

using json = nlohmann::ordered_json;

namespace {

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

void expect_kind(const json& j, const std::string& kind) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string() ||
        j["kind"].get<std::string>() != kind)
        throw std::invalid_argument("expected \"kind\": \"" + kind + "\"");
}

json building_to_json(const Building& b) {
    json pairs = json::array();
    for (std::size_t t = 0; t < b.blocks.size(); ++t) {
        json pair = json::array();
        pair.push_back(b.blocks[t]);
        if (t < b.spacers.size())
            pair.push_back(b.spacers[t]);
        else
            pair.push_back(nullptr);
        pairs.push_back(std::move(pair));
    }
    return pairs;
}

Building building_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument(where + ": building must be a nonempty array");
    Building b;
    for (std::size_t t = 0; t < j.size(); ++t) {
        const json& pair = j[t];
        if (!pair.is_array() || pair.size() != 2 ||
            !pair[0].is_number_integer())
            throw std::invalid_argument(where + ": entry " + std::to_string(t) +
                                        " must be [word_index, spacer|null]");
        b.blocks.push_back(pair[0].get<int>());
        bool last = t + 1 == j.size();
        if (pair[1].is_null()) {
            if (!last)
                throw std::invalid_argument(where +
                                            ": null spacer before the last entry");
        } else if (pair[1].is_number_integer()) {
            if (last)
                throw std::invalid_argument(where +
                                            ": last entry must carry null");
            b.spacers.push_back(pair[1].get<int>());
        } else {
            throw std::invalid_argument(where + ": spacer must be integer or null");
        }
    }
    return b;
}

}  // namespace

std::string construction_to_json(const RankConstruction& c) {
    json j;
    j["kind"] = "rank_construction";
    j["arity0"] = c.arity0();
    json steps = json::array();
    auto emit = [&](const LevelStep& st) {
        json buildings = json::array();
        for (const Building& b : st.buildings) buildings.push_back(building_to_json(b));
        json step;
        step["buildings"] = std::move(buildings);
        steps.push_back(std::move(step));
    };
    for (const LevelStep& st : c.prefix()) emit(st);
    for (const LevelStep& st : c.cycle()) emit(st);
    j["steps"] = std::move(steps);
    json schedule;
    if (c.schedule() == ScheduleKind::Periodic) {
        schedule["type"] = "periodic";
        schedule["cycle_len"] = c.cycle().size();
    } else {
        schedule["type"] = "explicit";
    }
    j["schedule"] = std::move(schedule);
    return j.dump();
}

RankConstruction construction_from_json(const std::string& text) {
    json j = parse(text);
    expect_kind(j, "rank_construction");
    if (!j.contains("arity0") || !j["arity0"].is_number_integer())
        throw std::invalid_argument("field \"arity0\" must be an integer");
    if (!j.contains("steps") || !j["steps"].is_array())
        throw std::invalid_argument("field \"steps\" must be an array");
    std::vector<LevelStep> steps;
    for (std::size_t i = 0; i < j["steps"].size(); ++i) {
        const json& step = j["steps"][i];
        std::string where = "steps[" + std::to_string(i) + "]";
        if (!step.is_object() || !step.contains("buildings") ||
            !step["buildings"].is_array())
            throw std::invalid_argument(where + ": missing \"buildings\" array");
        LevelStep st;
        for (std::size_t q = 0; q < step["buildings"].size(); ++q)
            st.buildings.push_back(building_from_json(
                step["buildings"][q],
                where + ".buildings[" + std::to_string(q) + "]"));
        steps.push_back(std::move(st));
    }
    std::size_t cycle_len = 0;
    if (j.contains("schedule")) {
        const json& sched = j["schedule"];
        if (!sched.is_object() || !sched.contains("type") ||
            !sched["type"].is_string())
            throw std::invalid_argument("field \"schedule.type\" must be a string");
        std::string type = sched["type"].get<std::string>();
        if (type == "periodic") {
            if (!sched.contains("cycle_len") ||
                !sched["cycle_len"].is_number_unsigned())
                throw std::invalid_argument(
                    "field \"schedule.cycle_len\" must be a nonnegative integer");
            cycle_len = sched["cycle_len"].get<std::size_t>();
            if (cycle_len == 0 || cycle_len > steps.size())
                throw std::invalid_argument(
                    "field \"schedule.cycle_len\" out of range");
        } else if (type != "explicit") {
            throw std::invalid_argument("unknown schedule type: " + type);
        }
    }
    std::vector<LevelStep> prefix(steps.begin(), steps.end() - cycle_len);
    std::vector<LevelStep> cycle(steps.end() - cycle_len, steps.end());
    return RankConstruction(j["arity0"].get<int>(), std::move(prefix),
                            std::move(cycle));
}

std::string diagram_to_json(const OrderedBratteliDiagram& d) {
    json j;
    j["kind"] = "bratteli";
    json levels = json::array();
    for (std::size_t k = 0; k < d.level_sizes.size(); ++k) {
        json level;
        level["size"] = d.level_sizes[k];
        if (k > 0) level["incoming"] = d.incoming[k - 1];
        levels.push_back(std::move(level));
    }
    j["levels"] = std::move(levels);
    return j.dump();
}

OrderedBratteliDiagram diagram_from_json(const std::string& text) {
    json j = parse(text);
    expect_kind(j, "bratteli");
    if (!j.contains("levels") || !j["levels"].is_array() || j["levels"].empty())
        throw std::invalid_argument("field \"levels\" must be a nonempty array");
    OrderedBratteliDiagram d;
    for (std::size_t k = 0; k < j["levels"].size(); ++k) {
        const json& level = j["levels"][k];
        std::string where = "levels[" + std::to_string(k) + "]";
        if (!level.is_object() || !level.contains("size") ||
            !level["size"].is_number_integer())
            throw std::invalid_argument(where + ": missing integer \"size\"");
        d.level_sizes.push_back(level["size"].get<int>());
        if (k == 0) continue;
        if (!level.contains("incoming") || !level["incoming"].is_array())
            throw std::invalid_argument(where + ": missing \"incoming\" array");
        std::vector<std::vector<int>> lists;
        for (const json& edges : level["incoming"]) {
            if (!edges.is_array())
                throw std::invalid_argument(where + ": incoming entries must be arrays");
            lists.push_back(edges.get<std::vector<int>>());
        }
        d.incoming.push_back(std::move(lists));
    }
    return d;
}

std::string sadic_to_json(const DirectiveSequence& ds) {
    json j;
    j["kind"] = "sadic";
    j["alphabets"] = ds.alphabet_sizes;
    json morphisms = json::array();
    auto emit = [&](const Morphism& m) {
        json entry;
        entry["rules"] = m.rules;
        morphisms.push_back(std::move(entry));
    };
    for (const Morphism& m : ds.prefix) emit(m);
    for (const Morphism& m : ds.cycle) emit(m);
    j["morphisms"] = std::move(morphisms);
    json schedule;
    if (!ds.cycle.empty()) {
        schedule["type"] = "periodic";
        schedule["cycle_len"] = ds.cycle.size();
    } else {
        schedule["type"] = "explicit";
    }
    j["schedule"] = std::move(schedule);
    return j.dump();
}

DirectiveSequence sadic_from_json(const std::string& text) {
    json j = parse(text);
    expect_kind(j, "sadic");
    if (!j.contains("alphabets") || !j["alphabets"].is_array())
        throw std::invalid_argument("field \"alphabets\" must be an array");
    if (!j.contains("morphisms") || !j["morphisms"].is_array())
        throw std::invalid_argument("field \"morphisms\" must be an array");
    DirectiveSequence ds;
    ds.alphabet_sizes = j["alphabets"].get<std::vector<int>>();
    std::vector<Morphism> morphisms;
    for (std::size_t i = 0; i < j["morphisms"].size(); ++i) {
        const json& entry = j["morphisms"][i];
        std::string where = "morphisms[" + std::to_string(i) + "]";
        if (!entry.is_object() || !entry.contains("rules") ||
            !entry["rules"].is_array())
            throw std::invalid_argument(where + ": missing \"rules\" array");
        Morphism m;
        for (const json& rule : entry["rules"]) {
            if (!rule.is_array())
                throw std::invalid_argument(where + ": rules must be arrays");
            m.rules.push_back(rule.get<std::vector<int>>());
        }
        m.source_size = static_cast<int>(m.rules.size());
        morphisms.push_back(std::move(m));
    }
    std::size_t cycle_len = 0;
    if (j.contains("schedule")) {
        const json& sched = j["schedule"];
        if (!sched.is_object() || !sched.contains("type") ||
            !sched["type"].is_string())
            throw std::invalid_argument("field \"schedule.type\" must be a string");
        std::string type = sched["type"].get<std::string>();
        if (type == "periodic") {
            if (!sched.contains("cycle_len") ||
                !sched["cycle_len"].is_number_unsigned())
                throw std::invalid_argument(
                    "field \"schedule.cycle_len\" must be a nonnegative integer");
            cycle_len = sched["cycle_len"].get<std::size_t>();
            if (cycle_len == 0 || cycle_len > morphisms.size())
                throw std::invalid_argument(
                    "field \"schedule.cycle_len\" out of range");
        } else if (type != "explicit") {
            throw std::invalid_argument("unknown schedule type: " + type);
        }
    }
    ds.prefix.assign(morphisms.begin(), morphisms.end() - cycle_len);
    ds.cycle.assign(morphisms.end() - cycle_len, morphisms.end());
    // target sizes follow the alphabet chain
    if (ds.alphabet_sizes.size() != ds.prefix.size() + 1)
        throw std::invalid_argument(
            "field \"alphabets\" must list one size per explicit level");
    for (std::size_t i = 0; i < ds.prefix.size(); ++i)
        ds.prefix[i].target_size = ds.alphabet_sizes[i];
    int prev = ds.alphabet_sizes.back();
    for (Morphism& m : ds.cycle) {
        m.target_size = prev;
        prev = m.source_size;
    }
    return ds;
}

std::string render_word(const Word& w, bool full, std::size_t limit) {
    if (full || w.size() <= limit) return w.bits();
    std::size_t head = limit / 2, tail = limit - head;
    return w.bits().substr(0, head) + "…" + w.bits().substr(w.size() - tail) +
           " (" + std::to_string(w.size()) + " symbols)";
}

}  // namespace symbrank
