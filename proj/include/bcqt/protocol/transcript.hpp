// transcript.hpp
// Ordered classical message log of one protocol round. The controller's
// announcement is only valid after both users have published their outcomes;
// appending it earlier throws.

#pragma once

#include <string>
#include <vector>

#include "bcqt/errors.hpp"

namespace bcqt::protocol {

enum class Party { Alice, Bob, Charlie };

inline const char* to_string(Party p) {
    switch (p) {
    case Party::Alice: return "alice";
    case Party::Bob: return "bob";
    case Party::Charlie: return "charlie";
    }
    return "?";
}

struct Message {
    Party sender;
    std::vector<Party> recipients;
    std::string payload;
};

class Transcript {
public:
    void append(Message m) {
        if (m.sender == Party::Charlie &&
            !(has_message_from(Party::Alice) && has_message_from(Party::Bob)))
            throw TranscriptOrderViolation(
                "controller announcement before both user results");
        messages_.push_back(std::move(m));
    }

    bool has_message_from(Party p) const {
        for (const auto& m : messages_)
            if (m.sender == p) return true;
        return false;
    }

    const std::vector<Message>& messages() const { return messages_; }

private:
    std::vector<Message> messages_;
};

} // namespace bcqt::protocol
