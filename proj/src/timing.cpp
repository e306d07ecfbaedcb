#include "cwlearn/timing.hpp"

#include <stdexcept>

namespace cwlearn {

void MacTiming::validate() const {
    if (slot_time <= 0 || difs <= 0 || sifs <= 0 || phy_header <= 0 ||
        ack_duration <= 0 || control_rate <= 0) {
        throw std::invalid_argument("MacTiming: all fields must be strictly positive");
    }
    if (difs <= sifs) {
        throw std::invalid_argument("MacTiming: difs must exceed sifs");
    }
}

void FrameSpec::validate() const {
    if (payload_bits < 0) {
        throw std::invalid_argument("FrameSpec: payload_bits must be non-negative");
    }
    if (phy_rate <= 0) {
        throw std::invalid_argument("FrameSpec: phy_rate must be strictly positive");
    }
}

double success_duration(const FrameSpec& frame, const MacTiming& timing) {
    frame.validate();
    timing.validate();
    return timing.phy_header + frame.payload_bits / frame.phy_rate + timing.sifs +
           timing.ack_duration + timing.difs;
}

double failure_duration(const FrameSpec& frame, const MacTiming& timing) {
    frame.validate();
    timing.validate();
    return timing.phy_header + frame.payload_bits / frame.phy_rate + timing.difs;
}

}  // namespace cwlearn
