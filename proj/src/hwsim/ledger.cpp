#include "gneighbor/hwsim.hpp"

#include <cstdio>

#include <json.hpp>

namespace gneighbor::hw {

AreaPowerLedger AreaPowerLedger::reference(int pixels) {
    AreaPowerLedger ledger;
    double n = pixels;
    ledger.entries = {
        {"XOR", 25.02 * n, 3.6 * n},
        {"Memristor arrays", 128.08 * n, 12.0 * n},
        {"Bit-by-bit comparison", 111.06 * n, 14.0 * n},
        {"SRAM", 16.0 * n, 1.8 * n},
    };
    return ledger;
}

double AreaPowerLedger::total_area() const {
    double sum = 0.0;
    for (const auto& e : entries)
        sum += e.area_um2;
    return sum;
}

double AreaPowerLedger::total_power() const {
    double sum = 0.0;
    for (const auto& e : entries)
        sum += e.power_mw;
    return sum;
}

namespace {

std::string fmt1(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", v);
    return buf;
}

std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

}  // namespace

std::string area_power_report_text(const AreaPowerLedger& ledger) {
    std::string out = "Block                   Area (um^2)   Power (mW)\n";
    char line[128];
    for (const auto& e : ledger.entries) {
        std::snprintf(line, sizeof(line), "%-22s  %11.2f  %11.2f\n", e.name.c_str(),
                      e.area_um2, e.power_mw);
        out += line;
    }
    std::snprintf(line, sizeof(line), "%-22s  %11.1f  %11.1f\n", "Total",
                  ledger.total_area(), ledger.total_power());
    out += line;
    return out;
}

std::string area_power_report_csv(const AreaPowerLedger& ledger) {
    std::string out = "block,area_um2,power_mw\n";
    for (const auto& e : ledger.entries)
        out += e.name + "," + fmt2(e.area_um2) + "," + fmt2(e.power_mw) + "\n";
    out += "Total," + fmt1(ledger.total_area()) + "," + fmt1(ledger.total_power()) + "\n";
    return out;
}

std::string area_power_report_json(const AreaPowerLedger& ledger) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& e : ledger.entries)
        blocks.push_back(
            {{"block", e.name}, {"area_um2", e.area_um2}, {"power_mw", e.power_mw}});
    nlohmann::json j{{"blocks", blocks},
                     {"total_area_um2", ledger.total_area()},
                     {"total_power_mw", ledger.total_power()}};
    return j.dump(2);
}

}  // namespace gneighbor::hw
