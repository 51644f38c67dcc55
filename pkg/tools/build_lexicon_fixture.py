#!/usr/bin/env python3
"""Regenerate tests/data/lexicon_50k.txt.

The build environment has no system dictionary, so the stress lexicon is
generated: a curated list of common English roots is expanded through
productive prefixes and suffixes with standard orthographic joining
(final-e drop, consonant doubling, y -> i). The output is deterministic,
deduplicated, sorted, and comfortably exceeds 50,000 entries. The file
is committed; this script only needs to run when the root list changes.
"""

from pathlib import Path

ROOTS = """
able absorb abstract accent access accident accord account accuse ache achieve acid
acquire act adapt add address adjust admire admit adopt adore advance advert advise
affect agree aid aim air alarm alert align allow ally alter amaze amend amount amuse
analyze anchor anger angle announce annoy answer appeal appear applaud apply appoint
approach approve arch argue arm arrange arrest arrive art ask assault assemble assert
assess assign assist assume assure attach attack attempt attend attract audit author
avert avoid award babble back bail bake balance ball ban band bank bar bare bargain
bark base bat bathe battle bead beam bean bear beat beg begin believe bell belong
belt bench bend benefit best bet better bias bid bill bind bird bite blame blank
blast blaze bleed blend bless blind blink block bloom blot blue bluff blunder blur
board boast boat boil bolt bomb bond bone book boom boost boot border bore borrow
boss bother bottle bound bow bowl box brace brag brain brake branch brand brave
breach bread break breed brew bribe brick bridge brief brighten bring broad broadcast
broil brood brush buckle bud budge budget buffer bug bulge bulk bump bunch bundle
burn burst bury bus bust bustle butter buzz cable cage cake calm camp cancel cap
capture care cart carve case cash cast catch cater cause caution cave cease cell
cement center chain chair chalk challenge chance change channel chant charge charm
chart chase chat cheat check cheer chew chill chip choke chop chrome chuckle churn
cipher circle cite claim clamp clang clap clash clasp class clean clear click climb
cling clip cloak clock clog close cloud clown club clutch coach coast coat coax code
coil coin collapse collect color comb combine comfort command commend comment commit
compare compel compete compile complain compose compute conceal concede concern
concert conclude condemn condition conduct confer confess confide confine confirm
conform confront confuse connect conquer consent consider consist console construct
consult consume contact contain contend contest continue contract contrast control
convert convey convince cook cool copy cord core correct cost couch cough counsel
count counter couple course court cover crack cradle craft cram crash crawl credit
creep crest crib critic crop cross crowd crown cruise crumble crush cry cue cull
cult cup curb cure curl curse curve cushion cycle dab dam damage damp dance dare
dart dash date dawn daze deal debate debit decay decide deck declare decline decode
decorate decrease deduce deed deem deepen defeat defend defer define deflect deform
defy delay delete deliver demand demo demote dent deny depart depend depict deploy
deposit depress derive descend describe desert design desire detach detail detect
deter develop deviate devise devote dial dice dictate differ digest dim dine dip
direct discern discharge disclose discount discover discuss dish dismiss dispatch
display dispose dispute distill distort disturb dive divert divide dock doctor dodge
dole doll domain dominate donate doom dose dot double doubt dow dower down dozen
draft drag drain dream dress drift drill drink drip drive drone droop drop drown
drum dry duck dull dump dust dwell earn ease echo edge edit educate effect elect
elevate embark embed emerge emit employ empower enable enact enchant encode endorse
endure enforce engage engineer enjoy enlarge enlist enrich enroll ensure enter
entertain entitle equal equate equip erase erect erode erupt escape escort essay
esteem estimate evade evaluate evoke evolve exact exalt exceed excel exchange excite
exclaim exclude excuse execute exempt exert exhale exhaust exhibit exile exist exit
expand expect expel expend experiment expire explain explode exploit explore export
expose express extend extract eye face fade fail faint fake fall falter fan fancy
farm fashion fasten fault favor fear feast feature feed feel fence fend ferment
ferry fetch fever fiddle field fight figure file fill film filter fin find fine
finger finish fire firm fish fit fix flag flake flame flank flap flare flash flat
flatter flavor flee flex flick flinch fling flip float flock flood flop flourish
flow flower fluff flush flutter fly foam focus fold follow fool foot force forecast
forge forget form fort fortify forward foster foul found fowl fox frame free freeze
fresh fret fright frost frown fuel fumble function fund furnish fuse gain gallop
gamble game garden gasp gate gather gauge gaze gear gender general generate gesture
gift giggle glance glare glaze gleam glide glimpse glitter gloss glow glue gnaw
govern grab grace grade grant graph grasp grate greet grid grieve grill grind grip
groan groom groove ground group grow growl grudge grunt guard guess guide gulp gush
habit hack hail halt hammer hand handle hang harbor harden harm harness harvest
hash haste hatch haul haunt hazard head heal heap heat heave hedge heed help herd
hide highlight hike hint hire hiss hit hitch hoard hoist hold hollow honor hook
hope horn host house hover howl huddle hug hum humble hunt hurl hurry hurt hush
hustle idle ignite ignore image imagine imitate immerse impact impart impeach impel
implant implement import impose impress imprint improve impulse incline include
increase incur indent index indicate induce indulge infect infer inflate inflict
inform inhale inherit inhibit inject injure ink input inquire insert insist inspect
inspire install instill instruct insult insure intend intercept interest interfere
interpret interrupt invade invent invest invite invoke involve iron issue itch item
jab jam jar jest jet jingle jog join joke jolt journey judge juggle jumble jump
justify keen keep key kick kid kindle kiss knit knock knot know label labor lace
lack ladder lag lament land lapse lash last latch laugh launch lavish layer lead
leak lean leap learn lease leave lecture legislate lend lengthen lessen let level
lever license lick life lift light lighten like limit limp line linger link lisp
list listen litter live load loan lobby locate lock lodge log loom loop loose
loosen loot lose lot love lower lull lumber lump lunge lurch lure lurk mail main
maintain make manage mandate mangle manifest manner map march margin mark market
marshal marvel mash mask master match mate matter mature measure meddle mediate
meet meld melt mend mention merge merit mesh mess message meter might migrate mill
mimic mind mingle minister mint minute mirror mislead miss mist mix moan mock model
moderate modify moist mold monitor mop mortgage motion motivate mount mourn move
mow muddle muffle multiply mumble murmur muse muster mutter muzzle nag nail name
narrate narrow navigate near neglect negotiate nest net nettle neuter nibble nick
nod nominate norm nose notch note notice notify nourish number nurse nurture obey
object oblige obscure observe obsess obstruct obtain occasion occupy occur offend
offer officiate offset ooze operate oppose oppress opt order organize orient
originate ornament oust outfit outline output outrage overhaul overlap overlook
overturn owe own pace pack pad paddle page pain paint pair pale pamper pan panel
panic parade pardon park parse part partake pass paste pat patch patrol pattern
pause pave paw pay peck pedal peel peer pelt pen penalize pend pepper perceive
perch perfect perform perish permit persist person persuade pertain pester phase
phone photograph phrase pick picket picture piece pierce pile pilot pin pinch pine
pioneer pipe pitch pity pivot place plan plane plant plaster plate play plead
please pledge plot plow pluck plug plunder plunge ply point poise poke polish poll
pollute pool pop pose position post postpone pot pounce pound pour powder power
practice praise prance pray preach precede predict prefer premise prepare prescribe
present preserve preside press pressure presume pretend prevail prevent preview
price prick prime print probe process proclaim produce profess profit program
progress project promise promote prompt pronounce proof prop propel propose
prosecute prospect prosper protect protest prove provide provoke prowl prune pry
publish puff pull pulse pump punch punish purchase purge purify purse pursue push
put puzzle quake qualify quarrel quench query quest question queue quicken quiet
quit quiver quote race rack radiate rage raid rail rain raise rally ramble random
range rank ransom rant rap rate ration rattle ravage rave reach react read reap
rear reason rebel rebuke recall recede receive recite reckon recline recognize
recoil recollect recommend reconcile record recount recover recruit redeem reduce
reel refer referee refine reflect reform refrain refresh refuse refute regain
regard register regret regulate rehearse reign rein reinforce reject rejoice relate
relax relay release relent relieve relish rely remain remark remedy remember remind
remit remove rend render renew renounce rent repair repeal repeat repel repent
replace reply report repose represent repress reprove repute request require rescue
resemble resent reserve reside resign resist resolve resort respect respond rest
restore restrain restrict result resume retain retire retort retreat retrieve
return reveal revel revenge reverse revert review revise revive revoke revolt
revolve reward rhyme rid ride ridicule rig rinse rip ripen ripple rise risk rival
roam roar roast rob rock roll romp roof room root rope rot rotate rouse route rove
rub ruffle ruin rule rumble run rush rust rustle sack sadden saddle sag sail salute
sample sanction sand sap sate saturate save savor saw scale scamper scan scar scare
scatter scent schedule scheme school scoff scold scoop scope score scorn scour
scout scowl scramble scrape scratch scream screen screw scribble script scrub seal
search season seat secure seduce see seed seek seem seep seize select sell send
sense serve settle sever shade shadow shake shame shape share sharpen shatter shave
shear shed shelter shield shift shine ship shirk shiver shock shoot shop shore
shorten shout shove show shower shred shriek shrink shrug shudder shuffle shun shut
sicken side sift sigh sign signal signify silence simmer simulate sin sing sink sip
sit situate size sketch skid skim skip slacken slam slant slap slash slay sleep
slice slide sling slip slit slow slumber slump smack smash smear smell smile smite
smooth smother smuggle snap snare snarl snatch sneak sneer sniff snort snow snub
soak soar sob sober soften soil solicit solve soothe sort sound sour source space
span spare spark sparkle speak spear specify speculate speed spell spend spike
spill spin spiral spit splash split spoil sponsor spot spout sprawl spray spread
spring sprinkle sprout spur spurn squander square squash squat squeak squeal
squeeze stab stack staff stage stagger stain stake stalk stall stammer stamp stand
staple stare start startle starve state station stay steady steal steam steer stem
step stick stiffen stifle still stimulate sting stir stitch stock stoop stop store
storm stow straighten strain strand strap stray stream strengthen stress stretch
strew stride strike string strip strive stroke stroll structure struggle strut
study stuff stumble stun stunt subdue subject submit subscribe subside substitute
subtract succeed suck sue suffer suggest suit sum summon supervise supply support
suppose suppress surface surge surmise surpass surprise surrender surround survey
survive suspect suspend sustain swallow swap sway swear sweat sweep swell swerve
swim swing switch swoop tabulate tack tackle tag tail tailor take tally tame tamper
tan tangle tap tape taper target tarnish task taste taunt tax teach team tear
tease temper tempt tend tender term test testify thank thaw theme theorize thicken
thin think thirst thrash thread threaten thrill thrive throb throttle throw thrust
thud thump thunder tick tickle tide tidy tie tighten tilt time tinker tint tip
tire title toast toil tolerate toll tone torment toss total touch toughen tour tow
trace track trade trail train tramp trample transfer transform translate transmit
transport trap travel tread treasure treat tremble trend trespass trick trickle
trifle trigger trim trip triumph trot trouble trudge trumpet trust try tuck tug
tumble tune tunnel turn tutor twinkle twist type uncover undergo undermine undo
unfold unify unite unload unlock unravel unveil update upgrade uphold uproot upset
urge usher utter vacate validate value vanish vanquish vary vault vend vent venture
verge verify vest veto vex vibrate view violate visit voice void vote vouch vow
voyage wade wag wage wail wait wake walk wall wander wane want ward warm warn warp
wash waste watch water wave waver weaken wean wear weary weave wed weed weep weigh
welcome weld wet wheel whip whirl whisk whisper whistle widen wield wiggle will
wilt win wince wind wink wipe wish wit withdraw wither withhold withstand witness
wobble wonder word work worry worsen worship wound wrap wreck wrench wrest wrestle
wring wrinkle write yank yawn yearn yell yield zip zone
memory believe science jealous real incredible beauty psychology police policy
assembly neural network theory cognition potential language process power spectrum
analysis synchrony consciousness motivation evolution motor system fallacy decision
ecology valid ethic judgment probability information subject experiment response
cortex word cognitive organ communication behavior episode mechanism plan market
"""

PREFIXES = ["un", "re", "non", "pre", "over", "under", "out", "mis", "dis", "anti"]

VOWELS = "aeiou"


def _double_final(root: str) -> bool:
    # one-syllable-ish CVC ending, the usual doubling context
    return (
        len(root) >= 3
        and root[-1] not in VOWELS + "wxy"
        and root[-2] in VOWELS
        and root[-3] not in VOWELS
    )


def inflections(root: str) -> set[str]:
    forms = {root}
    # plural / 3rd singular
    if root.endswith(("s", "x", "z", "ch", "sh")):
        forms.add(root + "es")
    elif root.endswith("y") and root[-2:-1] and root[-2] not in VOWELS:
        forms.add(root[:-1] + "ies")
    else:
        forms.add(root + "s")
    # ed / ing, with e-drop and doubling
    if root.endswith("e"):
        stem = root[:-1]
        forms.update({root + "d", stem + "ing", stem + "ings"})
    elif root.endswith("y") and root[-2] not in VOWELS:
        forms.update({root[:-1] + "ied", root + "ing", root + "ings"})
    else:
        stem = root + root[-1] if _double_final(root) else root
        forms.update({stem + "ed", stem + "ing", stem + "ings"})
    # derivational endings
    base = root[:-1] if root.endswith("e") else root
    ybase = root[:-1] + "i" if root.endswith("y") and root[-2] not in VOWELS else root
    forms.update(
        {
            root + "ly",
            ybase + "ness",
            ybase + "nesses",
            root + "ment",
            root + "ments",
            base + "er",
            base + "ers",
            base + "est",
            base + "ation",
            base + "ations",
            base + "al",
            base + "ally",
            base + "ic",
            base + "ical",
            base + "ically",
            base + "ity",
            base + "ities",
            base + "ive",
            base + "ively",
            base + "ous",
            base + "ously",
            ybase + "ful",
            ybase + "fully",
            ybase + "less",
            base + "able",
            base + "ably",
            base + "ize",
            base + "izes",
            base + "ized",
            base + "izing",
            base + "ization",
            base + "izations",
            base + "ist",
            base + "ists",
            base + "ism",
            base + "isms",
        }
    )
    return forms


def main() -> None:
    roots = sorted(set(ROOTS.split()))
    words: set[str] = set()
    for root in roots:
        words.update(inflections(root))
    for i, root in enumerate(roots):
        for prefix in PREFIXES[: 4 + i % 7]:
            words.add(prefix + root)
            words.add(prefix + root + "s")
            if root.endswith("e"):
                words.add(prefix + root + "d")
                words.add(prefix + root[:-1] + "ing")
            else:
                words.add(prefix + root + "ed")
                words.add(prefix + root + "ing")
    out = Path(__file__).resolve().parent.parent / "tests" / "data" / "lexicon_50k.txt"
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text("\n".join(sorted(words)) + "\n", encoding="utf-8")
    print(f"{len(words)} words -> {out}")


if __name__ == "__main__":
    main()
